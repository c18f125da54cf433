#include "klrsk/quotients.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "klrsk/cells.hpp"
#include "klrsk/rsk.hpp"

namespace klrsk {

void GroupAlgebraElt::add(const Permutation& w, const Scalar& c) {
  if (w.size() != n_) throw std::invalid_argument("permutation of the wrong degree");
  if (c.isZero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

GroupAlgebraElt operator*(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
  if (a.n_ != b.n_ || a.p_ != b.p_) throw std::invalid_argument("group algebra mismatch");
  GroupAlgebraElt out(a.n_, a.p_);
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, e] : b.terms_) out.add(x * y, c * e);
  return out;
}

std::string GroupAlgebraElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*[" << w.str() << "]";
  }
  return os.str();
}

namespace {

Permutation embed(const Permutation& t, int n) {
  std::vector<int> w = t.word();
  for (int i = t.size() + 1; i <= n; ++i) w.push_back(i);
  return Permutation(std::move(w));
}

std::vector<Permutation> symmetricElements(int n) {
  const auto& G = SymmetricGroup::of(n);
  std::vector<Permutation> out;
  out.reserve(G.order());
  for (SymmetricGroup::Index i = 0; i < G.order(); ++i) out.push_back(G.element(i));
  return out;
}

Scalar signScalar(int sign, std::uint32_t p) { return Scalar::fromInteger(sign, p); }

}  // namespace

GroupAlgebraElt ydElement(int n, int d, std::uint32_t characteristic) {
  if (d < 1 || d + 1 > n) throw std::invalid_argument("y_d needs 1 <= d < n");
  GroupAlgebraElt y(n, characteristic);
  for (const auto& t : symmetricElements(d + 1)) y.add(embed(t, n), signScalar(t.sign(), characteristic));
  return y;
}

std::vector<Permutation> quotientBasisPermutations(int n, int d) {
  std::vector<Permutation> out;
  for (auto& w : symmetricElements(n))
    if (longestDecreasingSubsequence(w) <= d) out.push_back(std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupAlgebraElt> idealGenerators(int n, int d, std::uint32_t characteristic) {
  std::vector<GroupAlgebraElt> out;
  if (d >= n) return out;
  const auto all = symmetricElements(n);
  const int k = d + 1;
  // u y_d only depends on u S_{d+1} up to sign: forget which of the values 1..k sit where
  std::map<std::vector<int>, Permutation> left, right;
  for (const auto& w : all) {
    std::vector<int> key = w.word();
    for (int& x : key)
      if (x <= k) x = 0;
    left.emplace(key, w);
    std::vector<int> rkey = w.word();
    std::sort(rkey.begin(), rkey.begin() + k);
    right.emplace(rkey, w);
  }
  const GroupAlgebraElt y = ydElement(n, d, characteristic);
  for (const auto& [lk, u] : left) {
    GroupAlgebraElt uy(n, characteristic);
    for (const auto& [t, c] : y.terms()) uy.add(u * t, c);
    for (const auto& [rk, w] : right) {
      GroupAlgebraElt g(n, characteristic);
      for (const auto& [x, c] : uy.terms()) g.add(x * w, c);
      out.push_back(std::move(g));
    }
  }
  return out;
}

namespace {

std::vector<std::pair<std::size_t, Scalar>> coordinates(const GroupAlgebraElt& x) {
  const auto& G = SymmetricGroup::of(x.n());
  std::vector<std::pair<std::size_t, Scalar>> v;
  v.reserve(x.terms().size());
  for (const auto& [w, c] : x.terms()) v.emplace_back(G.index(w), c);
  return v;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace

QuotientBasisReport verifyQuotientBasis(int n, int d, const FieldSpec& field) {
  if (n < 1 || d < 1) throw std::invalid_argument("quotient basis needs n, d >= 1");
  if (n > kIdealMaxN) throw BoundExceeded("J(n,d) is only built for n <= " + std::to_string(kIdealMaxN));
  const std::uint32_t p = field.characteristic();
  const auto& G = SymmetricGroup::of(n);
  QuotientBasisReport r;
  for (const auto& mu : partitionsOf(n))
    if (mu.rows() <= d) {
      const std::size_t f = countStandard(mu);
      r.expectedBasisSize += f * f;
    }
  const auto basis = quotientBasisPermutations(n, d);
  r.basisSize = basis.size();

  RowSpace space(G.order(), p);
  for (const auto& g : idealGenerators(n, d, p)) {
    space.insertSparse(coordinates(g));
    if (space.rank() == G.order()) break;
  }
  r.idealDimension = space.rank();
  r.independentModuloIdeal = true;
  for (const auto& w : basis)
    if (!space.insertSparse({{G.index(w), field.one()}})) {
      r.independentModuloIdeal = false;
      break;
    }
  r.ok = r.basisSize == r.expectedBasisSize && r.idealDimension + r.basisSize == factorial(n) &&
         r.independentModuloIdeal;
  return r;
}

TabloidRep::TabloidRep(const Partition& lambda) : lambda_(lambda), tabloids_(enumerateTabloids(lambda)) {
  for (std::size_t i = 0; i < tabloids_.size(); ++i) index_.emplace(tabloids_[i], i);
}

std::vector<std::size_t> TabloidRep::permutationImage(const Permutation& w) const {
  if (w.size() != lambda_.size()) throw std::invalid_argument("permutation of the wrong degree");
  std::vector<std::size_t> out(tabloids_.size());
  for (std::size_t i = 0; i < tabloids_.size(); ++i) out[i] = index_.at(act(tabloids_[i], w));
  return out;
}

std::vector<std::pair<std::size_t, Scalar>> TabloidRep::image(const GroupAlgebraElt& x) const {
  const std::size_t D = dimension();
  std::map<std::size_t, Scalar> acc;
  for (const auto& [w, c] : x.terms()) {
    const auto img = permutationImage(w);
    for (std::size_t i = 0; i < D; ++i) {
      auto [it, fresh] = acc.emplace(i * D + img[i], c);
      if (!fresh) it->second += c;
    }
  }
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (auto& [k, c] : acc)
    if (!c.isZero()) out.emplace_back(k, std::move(c));
  return out;
}

namespace {

// Rows indexed by tabloid pairs (i, j), columns by the chosen permutations:
// entry 1 when tabloid i is sent to tabloid j.  Its rank is that of the rho(w).
std::size_t imageRank(const TabloidRep& rep, const std::vector<Permutation>& perms, std::uint32_t p) {
  const std::size_t D = rep.dimension();
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (std::size_t c = 0; c < perms.size(); ++c) {
    const auto img = rep.permutationImage(perms[c]);
    for (std::size_t i = 0; i < D; ++i) rows[i * D + img[i]].emplace_back(c, Scalar::one(p));
  }
  RowSpace space(perms.size(), p);
  for (const auto& [key, row] : rows) {
    space.insertSparse(row);
    if (space.rank() == perms.size()) break;
  }
  return space.rank();
}

std::vector<Permutation> survivors(const Partition& lambda) {
  std::vector<Permutation> out;
  const auto& table = rskTable(lambda.size());
  const auto& G = SymmetricGroup::of(lambda.size());
  for (SymmetricGroup::Index i = 0; i < G.order(); ++i)
    if (dominates(table.shape[i], lambda)) out.push_back(G.element(i));
  return out;
}

}  // namespace

TabloidKernelReport tabloidKernelBasisCheck(const Partition& lambda, const FieldSpec& field) {
  const int n = lambda.size();
  if (n > kIdealMaxN) throw BoundExceeded("tabloid kernel is only computed for n <= " + std::to_string(kIdealMaxN));
  const std::uint32_t p = field.characteristic();
  if (p != 0) throw std::invalid_argument("tabloid kernel basis is only asserted in characteristic 0");
  TabloidRep rep(lambda);
  TabloidKernelReport r;
  for (const auto& mu : partitionsOf(n))
    if (!dominates(mu, lambda)) {
      const std::size_t f = countStandard(mu);
      r.expectedKernelDimension += f * f;
    }
  const auto all = symmetricElements(n);
  r.kernelDimension = all.size() - imageRank(rep, all, p);
  const auto surv = survivors(lambda);
  r.survivorCount = surv.size();
  r.survivorsIndependent = imageRank(rep, surv, p) == surv.size();
  r.ok = r.kernelDimension == r.expectedKernelDimension && r.survivorsIndependent &&
         r.survivorCount + r.kernelDimension == all.size();
  return r;
}

bool tabloidKernelIntegralCheck(const Partition& lambda) {
  const int n = lambda.size();
  if (n > 4) throw BoundExceeded("integral tabloid check is only run for n <= 4");
  TabloidRep rep(lambda);
  const std::size_t D = rep.dimension();
  auto dense = [&](const Permutation& w) {
    std::vector<Scalar> v(D * D, Scalar::zero(0));
    const auto img = rep.permutationImage(w);
    for (std::size_t i = 0; i < D; ++i) v[i * D + img[i]] = Scalar::one(0);
    return v;
  };
  ScalarMatrix basis;
  for (const auto& w : survivors(lambda)) basis.push_back(dense(w));
  for (const auto& u : symmetricElements(n)) {
    const auto x = solveInRowSpan(basis, dense(u), 0);
    if (!x) return false;
    for (const auto& c : *x)
      if (denominator(c.asRational()) != 1) return false;
  }
  return true;
}

bool idealEqualsTabloidKernel(int n, int d) {
  if (d >= n) return true;
  const Partition lambda = lambdaND(n, d);
  const auto field = FieldSpec::rationals();
  TabloidRep rep(lambda);
  if (!rep.actsAsZero(ydElement(n, d, 0))) return false;
  const auto q = verifyQuotientBasis(n, d, field);
  const auto k = tabloidKernelBasisCheck(lambda, field);
  return q.idealDimension == k.kernelDimension;
}

CounterexampleReport charPCounterexample() {
  CounterexampleReport r;
  for (const char* w : {"2134", "2341", "2314", "1342", "3124", "1243", "4123", "1423"}) {
    std::vector<int> word;
    for (const char* c = w; *c; ++c) word.push_back(*c - '0');
    r.words.emplace_back(std::move(word));
  }
  r.allShape31 = std::all_of(r.words.begin(), r.words.end(),
                             [](const Permutation& w) { return rskShape(w) == Partition({3, 1}); });
  TabloidRep rep(Partition({2, 2}));
  GroupAlgebraElt mod2(4, 2), rational(4, 0);
  for (const auto& w : r.words) {
    mod2.add(w, Scalar::one(2));
    rational.add(w, Scalar::one(0));
  }
  r.annihilatesOverGF2 = rep.actsAsZero(mod2);
  r.nonzeroOverQ = !rep.actsAsZero(rational);
  r.verified = r.allShape31 && r.annihilatesOverGF2 && r.nonzeroOverQ;
  return r;
}

std::vector<Scalar> classicalSpechtVector(const TabloidRep& rep, const Tableau& t) {
  const std::size_t D = rep.dimension();
  std::map<Tabloid, std::size_t> index;
  for (std::size_t i = 0; i < D; ++i) index.emplace(rep.tabloids()[i], i);
  const Partition cols = t.shape().transpose();
  std::vector<std::vector<int>> columns(static_cast<std::size_t>(cols.rows()));
  for (int c = 0; c < cols.rows(); ++c)
    for (int r = 0; r < cols[c]; ++r) columns[static_cast<std::size_t>(c)].push_back(t.at(r, c));

  std::vector<Scalar> out(D, Scalar::zero(0));
  std::vector<std::vector<int>> current = columns;
  // walk the product of the column groups, one column at a time
  auto visit = [&](auto&& self, std::size_t c, int sign) -> void {
    if (c == columns.size()) {
      std::vector<int> img(static_cast<std::size_t>(t.size()) + 1);
      for (std::size_t k = 0; k < columns.size(); ++k)
        for (std::size_t r = 0; r < columns[k].size(); ++r) img[static_cast<std::size_t>(columns[k][r])] = current[k][r];
      const Tabloid moved = Tabloid::of(t.mapEntries([&](int e) { return img[static_cast<std::size_t>(e)]; }));
      out[index.at(moved)] += Scalar::fromInteger(sign, 0);
      return;
    }
    std::vector<int> perm(columns[c].size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inv = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inv;
      for (std::size_t r = 0; r < perm.size(); ++r) current[c][r] = columns[c][static_cast<std::size_t>(perm[r])];
      self(self, c + 1, inv % 2 ? -sign : sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    current[c] = columns[c];
  };
  visit(visit, 0, 1);
  return out;
}

bool classicalSpechtCheck(int n) {
  if (n > kIdealMaxN) throw BoundExceeded("classical Specht check is only run for n <= " + std::to_string(kIdealMaxN));
  for (const auto& lambda : partitionsOf(n)) {
    TabloidRep rep(lambda);
    RowSpace space(rep.dimension(), 0);
    std::size_t count = 0;
    for (const auto& t : enumerateStandard(lambda)) {
      if (!space.insert(classicalSpechtVector(rep, t))) return false;
      ++count;
    }
    if (count != countStandard(lambda)) return false;
  }
  for (int d = 1; d < n; ++d)
    if (!TabloidRep(lambdaND(n, d)).actsAsZero(ydElement(n, d, 0))) return false;
  return true;
}

namespace {

std::vector<std::pair<std::size_t, Scalar>> flatten(const ScalarMatrix& m, std::size_t offset = 0) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  const std::size_t d = m.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!m[i][j].isZero()) out.emplace_back(offset + i * d + j, m[i][j]);
  return out;
}

void requireCellBound(int n) {
  if (n > kIdealMaxN) throw BoundExceeded("cell module endomorphisms are only computed for n <= " + std::to_string(kIdealMaxN));
}

}  // namespace

EndomorphismReport endomorphismBasisCheck(const Partition& lambda, const FieldSpec& field) {
  return mixedModuleBasisCheck({lambda}, field);
}

EndomorphismReport permutationEndomorphismCheck(const Partition& lambda, const FieldSpec& field) {
  requireCellBound(lambda.size());
  const auto module = CellModule::build(lambda);
  const std::size_t d = module.dimension();
  const auto& table = rskTable(lambda.size());
  const auto& G = SymmetricGroup::of(lambda.size());
  EndomorphismReport r;
  r.dimension = d * d;
  RowSpace space(d * d, field.characteristic());
  for (SymmetricGroup::Index w = 0; w < G.order(); ++w) {
    if (table.shape[w] != lambda) continue;
    const ScalarMatrix m = specialize(module.actionOfT(G.element(w)), field);
    bool identity = true;
    for (std::size_t i = 0; i < d && identity; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!(m[i][j] == (i == j ? field.one() : field.zero()))) {
          identity = false;
          break;
        }
    if (identity) ++r.identityActing;
    space.insertSparse(flatten(m));
  }
  r.rank = space.rank();
  r.ok = r.rank == r.dimension;
  return r;
}

EndomorphismReport mixedModuleBasisCheck(const std::vector<Partition>& shapes, const FieldSpec& field) {
  if (shapes.empty()) throw std::invalid_argument("no shapes given");
  const int n = shapes.front().size();
  for (const auto& s : shapes)
    if (s.size() != n) throw std::invalid_argument("shapes of different sizes");
  requireCellBound(n);
  std::vector<Partition> distinct = shapes;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  EndomorphismReport r;
  std::vector<std::vector<PolyMatrix>> cs;
  std::vector<std::size_t> offsets;
  for (const auto& mu : distinct) {
    const auto module = CellModule::build(mu);
    offsets.push_back(r.dimension);
    r.dimension += module.dimension() * module.dimension();
    cs.push_back(module.allCMatrices());
  }
  const auto& table = rskTable(n);
  const auto& G = SymmetricGroup::of(n);
  RowSpace space(r.dimension, field.characteristic());
  for (SymmetricGroup::Index x = 0; x < G.order(); ++x) {
    if (!std::binary_search(distinct.begin(), distinct.end(), table.shape[x])) continue;
    std::vector<std::pair<std::size_t, Scalar>> v;
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      auto part = flatten(specialize(cs[k][x], field), offsets[k]);
      v.insert(v.end(), part.begin(), part.end());
    }
    space.insertSparse(v);
  }
  r.rank = space.rank();
  r.ok = r.rank == r.dimension;
  return r;
}

Permutation monomialInvariantProduct(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> w = pi.word();
  for (int x : sigma.word()) w.push_back(x + pi.size());
  return Permutation(std::move(w));
}

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t d = a.size();
  IntMatrix c(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// all cycles of sigma, fixed points included, each listed as i, i sigma, i sigma^2, ...
std::vector<std::vector<int>> allCycles(const Permutation& sigma) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(sigma.size()) + 1, 0);
  for (int i = 1; i <= sigma.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

TraceSpanReport traceMonomialSpanCheck(int n, int m, int d, std::size_t trials, std::uint64_t seed) {
  if (n < 1 || m < 1 || d < 1 || trials < 1) throw std::invalid_argument("trace span check needs positive sizes");
  if (n > kIdealMaxN) throw BoundExceeded("trace span check is only run for n <= " + std::to_string(kIdealMaxN));
  std::size_t colourings = 1;
  for (int i = 0; i < n; ++i) colourings *= static_cast<std::size_t>(m);
  if (colourings > 100000) throw BoundExceeded("too many colourings m^n");

  const auto perms = symmetricElements(n);
  std::vector<std::vector<std::vector<int>>> cycles;
  std::vector<char> restricted;
  for (const auto& s : perms) {
    cycles.push_back(allCycles(s));
    restricted.push_back(longestDecreasingSubsequence(s) <= d);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  TraceSpanReport r;
  r.trials = trials;
  for (int round = 0; round < 6; ++round) {
    // samples[t][c]: matrix A_c in trial t
    std::vector<std::vector<IntMatrix>> samples(r.trials, std::vector<IntMatrix>(static_cast<std::size_t>(m)));
    for (auto& tuple : samples)
      for (auto& A : tuple) {
        A.assign(static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(d)));
        for (auto& row : A)
          for (auto& x : row) x = entry(rng);
      }
    RowSpace full(r.trials, 0), part(r.trials, 0);
    std::vector<int> nu(static_cast<std::size_t>(n), 0);
    for (std::size_t code = 0; code < colourings; ++code) {
      std::size_t c = code;
      for (int i = 0; i < n; ++i, c /= static_cast<std::size_t>(m)) nu[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(m));
      for (std::size_t s = 0; s < perms.size(); ++s) {
        std::vector<Scalar> values(r.trials);
        for (std::size_t t = 0; t < r.trials; ++t) {
          std::int64_t value = 1;
          for (const auto& cyc : cycles[s]) {
            IntMatrix P = samples[t][static_cast<std::size_t>(nu[static_cast<std::size_t>(cyc[0] - 1)])];
            for (std::size_t k = 1; k < cyc.size(); ++k)
              P = mul(P, samples[t][static_cast<std::size_t>(nu[static_cast<std::size_t>(cyc[k] - 1)])]);
            std::int64_t tr = 0;
            for (int i = 0; i < d; ++i) tr += P[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
            value *= tr;
          }
          values[t] = Scalar::fromInteger(value, 0);
        }
        full.insert(values);
        if (restricted[s]) part.insert(values);
      }
    }
    r.fullRank = full.rank();
    r.restrictedRank = part.rank();
    if (r.fullRank < r.trials || round == 5) break;
    r.trials *= 2;  // saturated: the samples cannot separate the span, try more
  }
  r.ok = r.fullRank < r.trials && r.restrictedRank == r.fullRank;
  return r;
}

}  // namespace klrsk
