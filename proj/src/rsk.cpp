#include "klrsk/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace klrsk {

RskPair rsk(const Permutation& w) {
  std::vector<std::vector<int>> insertion, recording;
  for (int i = 1; i <= w.size(); ++i) {
    int x = w(i);
    std::size_t row = 0;
    for (;; ++row) {
      if (row == insertion.size()) {
        insertion.push_back({x});
        recording.push_back({i});
        break;
      }
      auto& r = insertion[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        recording[row].push_back(i);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {Tableau(std::move(recording)), Tableau(std::move(insertion))};
}

Permutation rskInverse(const Tableau& P, const Tableau& Q) {
  if (!(P.shape() == Q.shape())) throw std::domain_error("RSK pair must have a common shape");
  if (!P.isStandard() || !Q.isStandard()) throw std::domain_error("RSK pair must consist of standard tableaux");
  const int n = P.size();
  auto insertion = Q.rows();
  auto recording = P.rows();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const auto [row, col] = P.position(i);
    auto r = static_cast<std::size_t>(row);
    int x = insertion[r][static_cast<std::size_t>(col)];
    insertion[r].erase(insertion[r].begin() + col);
    recording[r].pop_back();
    while (r-- > 0) {
      auto& above = insertion[r];
      // largest entry smaller than x is bumped back out
      auto it = std::lower_bound(above.begin(), above.end(), x);
      --it;
      std::swap(x, *it);
    }
    word[static_cast<std::size_t>(i - 1)] = x;
  }
  return Permutation(std::move(word));
}

Permutation rskInverse(const RskPair& pair) { return rskInverse(pair.P, pair.Q); }

Partition rskShape(const Permutation& w) { return rsk(w).P.shape(); }

}  // namespace klrsk
