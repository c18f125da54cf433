#include "klrsk/combinatorics.hpp"

#include <limits>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace klrsk {

namespace {

std::vector<int> parseInts(std::string_view text, char sep) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(sep, i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view tok = text.substr(i, j - i);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed integer list: " + std::string(text));
    out.push_back(value);
    i = j + 1;
  }
  return out;
}

std::string joinInts(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
  std::vector<int> t(static_cast<std::size_t>(rows() ? parts_[0] : 0), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++t[static_cast<std::size_t>(c)];
  return Partition(std::move(t));
}

std::string Partition::str() const { return joinInts(parts_); }

Partition Partition::parse(std::string_view text) { return Partition(parseInts(text, ',')); }

bool dominates(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("dominance needs partitions of the same size");
  int a = 0, b = 0;
  const int len = std::max(mu.rows(), lambda.rows());
  for (int i = 0; i < len; ++i) {
    a += mu[i];
    b += lambda[i];
    if (a < b) return false;
  }
  return true;
}

std::vector<Partition> partitionsOf(int n) {
  if (n < 0) throw std::invalid_argument("partitionsOf needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition lambdaND(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("lambdaND needs n, d >= 1");
  std::vector<Partition> candidates;
  for (auto& p : partitionsOf(n))
    if (p.rows() <= d) candidates.push_back(std::move(p));
  for (const auto& m : candidates) {
    bool minimal = true;
    for (const auto& other : candidates)
      if (!dominates(other, m)) {
        minimal = false;
        break;
      }
    if (minimal) return m;
  }
  throw std::logic_error("no dominance minimum found");
}

std::vector<std::vector<int>> hookLengths(const Partition& lambda) {
  const Partition t = lambda.transpose();
  std::vector<std::vector<int>> h(static_cast<std::size_t>(lambda.rows()));
  for (int a = 0; a < lambda.rows(); ++a)
    for (int b = 0; b < lambda[a]; ++b) h[static_cast<std::size_t>(a)].push_back((lambda[a] - b - 1) + (t[b] - a - 1) + 1);
  return h;
}

std::uint64_t countStandard(const Partition& lambda) {
  boost::multiprecision::cpp_int num = 1, den = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  for (const auto& row : hookLengths(lambda))
    for (int h : row) den *= h;
  const boost::multiprecision::cpp_int q = num / den;
  if (q > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("d(lambda) exceeds 64 bits");
  return q.convert_to<std::uint64_t>();
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lens;
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  shape_ = Partition(lens);
  if (shape_.rows() != static_cast<int>(rows_.size())) throw std::invalid_argument("tableau has an empty row");
  std::vector<bool> seen(static_cast<std::size_t>(shape_.size()) + 1, false);
  for (const auto& r : rows_)
    for (int x : r) {
      if (x < 1 || x > shape_.size() || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("tableau entries must be 1..n, each once");
      seen[static_cast<std::size_t>(x)] = true;
    }
}

std::pair<int, int> Tableau::position(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == entry) return {static_cast<int>(r), static_cast<int>(c)};
  throw std::invalid_argument("entry not in tableau");
}

bool Tableau::isRowStandard() const {
  for (const auto& r : rows_)
    if (!std::is_sorted(r.begin(), r.end())) return false;
  return true;
}

bool Tableau::isColumnStandard() const {
  for (std::size_t r = 1; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] < rows_[r - 1][c]) return false;
  return true;
}

std::vector<int> Tableau::readingWord() const {
  std::vector<int> w;
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

Tableau Tableau::mapEntries(const std::function<int(int)>& f) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (auto& x : r) x = f(x);
  return Tableau(std::move(rows));
}

Tableau Tableau::rowSuperstandard(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int k = 1;
  for (int p : lambda.parts()) {
    rows.emplace_back();
    for (int c = 0; c < p; ++c) rows.back().push_back(k++);
  }
  return Tableau(std::move(rows));
}

Tableau Tableau::columnSuperstandard(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int p : lambda.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
  const Partition t = lambda.transpose();
  int k = 1;
  for (int c = 0; c < t.rows(); ++c)
    for (int r = 0; r < t[c]; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = k++;
  return Tableau(std::move(rows));
}

std::string Tableau::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += '/';
    s += joinInts(rows_[r]);
  }
  return s;
}

Tableau Tableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find('/', i);
    if (j == std::string_view::npos) j = text.size();
    rows.push_back(parseInts(text.substr(i, j - i), ','));
    i = j + 1;
  }
  return Tableau(std::move(rows));
}

std::vector<Tableau> enumerateStandard(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
  std::vector<Tableau> out;
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < lambda.rows(); ++r) {
      const auto len = static_cast<int>(rows[static_cast<std::size_t>(r)].size());
      if (len >= lambda[r]) continue;
      if (r > 0 && static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
      rows[static_cast<std::size_t>(r)].push_back(k);
      rec(k + 1);
      rows[static_cast<std::size_t>(r)].pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.readingWord() < b.readingWord(); });
  const Tableau first = Tableau::columnSuperstandard(lambda);
  auto it = std::find(out.begin(), out.end(), first);
  std::rotate(out.begin(), it, it + 1);
  return out;
}

Tabloid::Tabloid(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lens;
  for (auto& r : rows_) {
    std::sort(r.begin(), r.end());
    lens.push_back(static_cast<int>(r.size()));
  }
  shape_ = Partition(lens);
  if (shape_.rows() != static_cast<int>(rows_.size())) throw std::invalid_argument("tabloid row sizes must form a partition");
  std::vector<bool> seen(static_cast<std::size_t>(shape_.size()) + 1, false);
  for (const auto& r : rows_)
    for (int x : r) {
      if (x < 1 || x > shape_.size() || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("tabloid rows must partition 1..n");
      seen[static_cast<std::size_t>(x)] = true;
    }
}

Tabloid Tabloid::of(const Tableau& t) { return Tabloid(t.rows()); }

Tabloid Tabloid::mapEntries(const std::function<int(int)>& f) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (auto& x : r) x = f(x);
  return Tabloid(std::move(rows));
}

std::string Tabloid::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += '/';
    s += joinInts(rows_[r]);
  }
  return s;
}

std::vector<Tabloid> enumerateTabloids(const Partition& lambda) {
  std::vector<int> labels;
  for (int r = 0; r < lambda.rows(); ++r) labels.insert(labels.end(), static_cast<std::size_t>(lambda[r]), r);
  std::vector<Tabloid> out;
  do {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
    for (std::size_t i = 0; i < labels.size(); ++i) rows[static_cast<std::size_t>(labels[i])].push_back(static_cast<int>(i) + 1);
    out.emplace_back(std::move(rows));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::vector<int> betaSequence(const Partition& lambda) {
  std::vector<int> beta;
  for (const auto& row : hookLengths(lambda)) beta.push_back(row.front());
  return beta;
}

Partition fromBetaSequence(const std::vector<int>& beta) {
  const int r = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < r; ++i) {
    if (beta[static_cast<std::size_t>(i)] <= 0 || (i > 0 && beta[static_cast<std::size_t>(i)] >= beta[static_cast<std::size_t>(i - 1)]))
      throw std::invalid_argument("beta-sequence must be strictly decreasing and positive");
    parts.push_back(beta[static_cast<std::size_t>(i)] - (r - 1 - i));
  }
  return Partition(parts);
}

std::int64_t signedD(std::vector<int> beta) {
  if (beta.empty()) return 1;
  int zeros = 0;
  for (int b : beta) {
    if (b < 0) throw std::domain_error("signedD: negative entry");
    if (b == 0) ++zeros;
  }
  if (zeros > 1) throw std::domain_error("signedD: more than one zero entry");
  {
    auto sorted = beta;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
  }
  if (zeros == 1) {
    // the zero is first moved to the end, one transposition per later entry
    std::vector<int> next;
    std::size_t after = 0;
    for (int b : beta) {
      if (b != 0) next.push_back(b - 1);
      else after = beta.size() - 1 - next.size();
    }
    const std::int64_t d = signedD(std::move(next));
    return after % 2 ? -d : d;
  }
  int inversions = 0;
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = i + 1; j < beta.size(); ++j)
      if (beta[i] < beta[j]) ++inversions;
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const auto d = static_cast<std::int64_t>(countStandard(fromBetaSequence(beta)));
  return inversions % 2 ? -d : d;
}

int nuP(std::uint64_t h, const ExtNat& p) {
  if (h == 0) throw std::domain_error("nu_p(0) is undefined");
  if (p.isInfinite()) return 0;
  int k = 0;
  while (h % p.value() == 0) {
    h /= p.value();
    ++k;
  }
  return k;
}

int nuEP(std::uint64_t h, const ExtNat& e, const ExtNat& p) {
  if (e.isInfinite() || h % e.value() != 0) return 0;
  return 1 + nuP(h / e.value(), p);
}

PowerDiagram powerDiagram(const Partition& lambda, const ExtNat& e, const ExtNat& p) {
  PowerDiagram d{lambda, {}};
  for (const auto& row : hookLengths(lambda)) {
    d.values.emplace_back();
    for (int h : row) d.values.back().push_back(nuEP(static_cast<std::uint64_t>(h), e, p));
  }
  return d;
}

bool carterCondition(const PowerDiagram& diagram) {
  bool columnsConstant = true;
  for (std::size_t r = 1; r < diagram.values.size(); ++r)
    for (std::size_t c = 0; c < diagram.values[r].size(); ++c)
      if (diagram.values[r][c] != diagram.values[0][c]) columnsConstant = false;
  bool rowsConstant = true;
  for (const auto& row : diagram.values)
    for (int x : row)
      if (x != row.front()) rowsConstant = false;
  return columnsConstant || rowsConstant;
}

}  // namespace klrsk
