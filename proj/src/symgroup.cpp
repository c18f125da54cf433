#include "klrsk/symgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace klrsk {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int x : word_) {
    if (x < 1 || x > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation word");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.word_[static_cast<std::size_t>(i - 1)], p.word_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::fromCycles(int n, std::string_view text) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw std::invalid_argument("malformed cycle notation");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced cycle notation");
    std::vector<int> cyc;
    std::size_t i = pos + 1;
    while (i < close) {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("malformed cycle notation");
      int x = 0;
      while (i < close && std::isdigit(static_cast<unsigned char>(text[i]))) x = 10 * x + (text[i++] - '0');
      // single-digit entries may be written without separators, as in (1542)
      if (x > n) {
        const std::string digits = std::to_string(x);
        for (char ch : digits) cyc.push_back(ch - '0');
      } else {
        cyc.push_back(x);
      }
    }
    for (int x : cyc) {
      if (x < 1 || x > n || used[static_cast<std::size_t>(x)]) throw std::invalid_argument("cycles must be disjoint within 1..n");
      used[static_cast<std::size_t>(x)] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) w[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()];
    pos = close + 1;
  }
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text, int n) {
  const auto first = text.find_first_not_of(' ');
  if (first != std::string_view::npos && text[first] == '(') {
    if (n <= 0) throw std::invalid_argument("cycle notation needs n");
    return fromCycles(n, text);
  }
  std::vector<int> w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("malformed permutation word");
    int x = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) x = 10 * x + (text[i++] - '0');
    w.push_back(x);
  }
  // compact single-digit words such as "2134"
  if (w.size() == 1 && text.find(',') == std::string_view::npos && w[0] > 9) {
    std::vector<int> digits;
    for (char ch : std::to_string(w[0])) digits.push_back(ch - '0');
    w = digits;
  }
  Permutation p(std::move(w));
  if (n > 0 && p.size() != n) throw std::invalid_argument("permutation has the wrong size");
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

bool Permutation::isIdentity() const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool Permutation::hasRightDescent(int i) const {
  // w s_i swaps the values i and i+1; it is shorter when i+1 comes first
  const auto a = std::find(word_.begin(), word_.end(), i);
  const auto b = std::find(word_.begin(), word_.end(), i + 1);
  return b < a;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(word_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::str() const {
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word_[i]);
  }
  return s;
}

std::string Permutation::cycleString() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutations of different sizes");
  std::vector<int> w(a.word_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = b.word_[static_cast<std::size_t>(a.word_[i] - 1)];
  return Permutation(std::move(w));
}

Permutation multiply(const Permutation& a, const Permutation& b) { return a * b; }

std::vector<int> reducedWord(const Permutation& w) {
  std::vector<int> out;
  Permutation x = w;
  while (!x.isIdentity()) {
    int s = 1;
    while (!x.hasRightDescent(s)) ++s;
    out.push_back(s);
    x = x * Permutation::simple(x.size(), s);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Permutation fromWord(int n, const std::vector<int>& generators) {
  Permutation p = Permutation::identity(n);
  for (int s : generators) p = p * Permutation::simple(n, s);
  return p;
}

namespace {

// r[i][k] = #{j <= i : w(j) >= k}, flattened
std::vector<int> rankMatrix(const std::vector<int>& w) {
  const std::size_t n = w.size();
  std::vector<int> r(n * (n + 1), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 1; k <= n; ++k)
      r[i * (n + 1) + k] = (i ? r[(i - 1) * (n + 1) + k] : 0) + (w[i] >= static_cast<int>(k) ? 1 : 0);
  return r;
}

}  // namespace

bool bruhatLeq(const Permutation& y, const Permutation& w) {
  if (y.size() != w.size()) throw std::invalid_argument("permutations of different sizes");
  const auto ry = rankMatrix(y.word());
  const auto rw = rankMatrix(w.word());
  for (std::size_t i = 0; i < ry.size(); ++i)
    if (ry[i] > rw[i]) return false;
  return true;
}

int longestDecreasingSubsequence(const Permutation& w) {
  const auto& a = w.word();
  std::vector<int> best(a.size(), 1);
  int result = a.empty() ? 0 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (a[j] > a[i]) best[i] = std::max(best[i], best[j] + 1);
    result = std::max(result, best[i]);
  }
  return result;
}

Tableau act(const Tableau& t, const Permutation& w) {
  if (t.size() != w.size()) throw std::invalid_argument("tableau and permutation sizes differ");
  return t.mapEntries([&](int i) { return w(i); });
}

Tabloid act(const Tabloid& t, const Permutation& w) {
  if (t.shape().size() != w.size()) throw std::invalid_argument("tabloid and permutation sizes differ");
  return t.mapEntries([&](int i) { return w(i); });
}

std::vector<Permutation> ParabolicData::subgroupElements() const {
  const int n = lambda.size();
  std::vector<Permutation> out;
  std::vector<int> word(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int row, int start) {
    if (row == lambda.rows()) {
      out.emplace_back(word);
      return;
    }
    std::vector<int> block;
    for (int k = 0; k < lambda[row]; ++k) block.push_back(start + k);
    do {
      for (int k = 0; k < lambda[row]; ++k) word[static_cast<std::size_t>(start - 1 + k)] = block[static_cast<std::size_t>(k)];
      rec(row + 1, start + lambda[row]);
    } while (std::next_permutation(block.begin(), block.end()));
  };
  rec(0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool ParabolicData::isDistinguished(const Permutation& d) const {
  int start = 0;
  for (int p : lambda.parts()) {
    for (int k = 1; k < p; ++k)
      if (d.word()[static_cast<std::size_t>(start + k - 1)] > d.word()[static_cast<std::size_t>(start + k)]) return false;
    start += p;
  }
  return true;
}

ParabolicData parabolic(const Partition& lambda) {
  const int n = lambda.size();
  ParabolicData data;
  data.lambda = lambda;
  std::vector<int> w0(static_cast<std::size_t>(n));
  int start = 1;
  for (int p : lambda.parts()) {
    for (int k = 0; k < p; ++k) w0[static_cast<std::size_t>(start - 1 + k)] = start + p - 1 - k;
    for (int k = 0; k + 1 < p; ++k) data.generators.push_back(start + k);
    start += p;
  }
  data.w0 = Permutation(w0);

  std::vector<int> labels;
  for (int r = 0; r < lambda.rows(); ++r) labels.insert(labels.end(), static_cast<std::size_t>(lambda[r]), r);
  do {
    std::vector<int> word;
    for (int r = 0; r < lambda.rows(); ++r)
      for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] == r) word.push_back(static_cast<int>(v) + 1);
    data.distinguished.emplace_back(std::move(word));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(data.distinguished.begin(), data.distinguished.end());

  const Tableau upper = Tableau::rowSuperstandard(lambda);
  const Tableau lower = Tableau::columnSuperstandard(lambda);
  std::vector<int> wl(static_cast<std::size_t>(n));
  for (int r = 0; r < lambda.rows(); ++r)
    for (int c = 0; c < lambda[r]; ++c) wl[static_cast<std::size_t>(upper.at(r, c) - 1)] = lower.at(r, c);
  data.wLambda = Permutation(wl);
  return data;
}

std::vector<Permutation> prefixes(const Permutation& w) {
  std::set<Permutation> seen{w};
  std::deque<Permutation> queue{w};
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (int s = 1; s < x.size(); ++s) {
      if (!x.hasRightDescent(s)) continue;
      Permutation y = x * Permutation::simple(x.size(), s);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  return out;
}

namespace {

std::uint32_t lehmerRank(const std::vector<int>& w) {
  const std::size_t n = w.size();
  std::uint32_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (w[j] < w[i]) ++smaller;
    rank = rank * static_cast<std::uint32_t>(n - i) + smaller;
  }
  return rank;
}

struct BruhatCache {
  std::once_flag once;
  std::vector<std::vector<bool>> table;
};

std::mutex& groupMutex() {
  static std::mutex m;
  return m;
}

std::map<int, BruhatCache>& bruhatCaches() {
  static std::map<int, BruhatCache> caches;
  return caches;
}

constexpr int kBruhatTableMaxN = 6;

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1 || n > 10) throw std::invalid_argument("SymmetricGroup supports 1 <= n <= 10");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  do {
    elements_.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  const std::size_t N = elements_.size();
  length_.resize(N);
  inverse_.resize(N);
  left_.assign(static_cast<std::size_t>(n - 1), std::vector<Index>(N));
  right_.assign(static_cast<std::size_t>(n - 1), std::vector<Index>(N));
  for (std::size_t i = 0; i < N; ++i) {
    const auto& word = elements_[i].word();
    length_[i] = elements_[i].length();
    inverse_[i] = lehmerRank(elements_[i].inverse().word());
    for (int s = 1; s < n; ++s) {
      auto l = word;
      std::swap(l[static_cast<std::size_t>(s - 1)], l[static_cast<std::size_t>(s)]);
      left_[static_cast<std::size_t>(s - 1)][i] = lehmerRank(l);
      auto r = word;
      for (auto& x : r) {
        if (x == s)
          x = s + 1;
        else if (x == s + 1)
          x = s;
      }
      right_[static_cast<std::size_t>(s - 1)][i] = lehmerRank(r);
    }
  }
  byLength_.resize(N);
  for (std::size_t i = 0; i < N; ++i) byLength_[i] = static_cast<Index>(i);
  std::stable_sort(byLength_.begin(), byLength_.end(), [&](Index a, Index b) { return length_[a] < length_[b]; });
}

const SymmetricGroup& SymmetricGroup::of(int n) {
  static std::map<int, std::unique_ptr<SymmetricGroup>> groups;
  std::lock_guard<std::mutex> lock(groupMutex());
  auto& slot = groups[n];
  if (!slot) slot.reset(new SymmetricGroup(n));
  return *slot;
}

SymmetricGroup::Index SymmetricGroup::index(const Permutation& w) const {
  if (w.size() != n_) throw std::invalid_argument("permutation size does not match the group");
  return lehmerRank(w.word());
}

SymmetricGroup::Index SymmetricGroup::multiply(Index a, Index b) const {
  Index x = a;
  for (int s : reducedWord(elements_[b])) x = rightMul(x, s);
  return x;
}

int SymmetricGroup::firstRightDescent(Index w) const {
  for (int s = 1; s < n_; ++s)
    if (length_[rightMul(w, s)] < length_[w]) return s;
  return 0;
}

int SymmetricGroup::firstLeftDescent(Index w) const {
  for (int s = 1; s < n_; ++s)
    if (length_[leftMul(s, w)] < length_[w]) return s;
  return 0;
}

bool SymmetricGroup::bruhatLeq(Index y, Index w) const {
  if (n_ > kBruhatTableMaxN) return klrsk::bruhatLeq(elements_[y], elements_[w]);
  BruhatCache* cache;
  {
    std::lock_guard<std::mutex> lock(groupMutex());
    cache = &bruhatCaches()[n_];
  }
  std::call_once(cache->once, [&] {
    const std::size_t N = elements_.size();
    std::vector<std::vector<int>> ranks(N);
    for (std::size_t i = 0; i < N; ++i) ranks[i] = rankMatrix(elements_[i].word());
    cache->table.assign(N, std::vector<bool>(N, false));
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        bool leq = true;
        for (std::size_t k = 0; k < ranks[a].size() && leq; ++k) leq = ranks[a][k] <= ranks[b][k];
        cache->table[a][b] = leq;
      }
  });
  return cache->table[y][w];
}

}  // namespace klrsk
