#include "klrsk/cells.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace klrsk {

namespace {

using Index = SymmetricGroup::Index;

int epsilon(int length) { return length % 2 ? -1 : 1; }

std::vector<std::vector<Permutation>> groupBy(const std::vector<std::vector<Index>>& classes, const SymmetricGroup& G) {
  std::vector<std::vector<Permutation>> out;
  for (const auto& c : classes) {
    std::vector<Permutation> cell;
    for (Index w : c) cell.push_back(G.element(w));
    std::sort(cell.begin(), cell.end());
    out.push_back(std::move(cell));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

template <class Key>
std::vector<std::vector<Index>> classesBy(const std::vector<Key>& keys) {
  std::map<Key, std::vector<Index>> m;
  for (Index w = 0; w < keys.size(); ++w) m[keys[w]].push_back(w);
  std::vector<std::vector<Index>> out;
  for (auto& [k, v] : m) out.push_back(std::move(v));
  return out;
}

}  // namespace

const RskTable& rskTable(int n) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<RskTable>> tables;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = tables[n];
  if (!slot) {
    const SymmetricGroup& G = SymmetricGroup::of(n);
    auto t = std::make_unique<RskTable>();
    for (Index w = 0; w < G.order(); ++w) {
      RskPair pq = rsk(G.element(w));
      t->shape.push_back(pq.P.shape());
      t->P.push_back(std::move(pq.P));
      t->Q.push_back(std::move(pq.Q));
    }
    slot = std::move(t);
  }
  return *slot;
}

CellDecomposition cellDecompositionCombinatorial(int n) {
  const SymmetricGroup& G = SymmetricGroup::of(n);
  const RskTable& r = rskTable(n);
  CellDecomposition d;
  d.n = n;
  d.leftCells = groupBy(classesBy(r.Q), G);
  d.rightCells = groupBy(classesBy(r.P), G);
  for (const Partition& lambda : partitionsOf(n)) {
    std::vector<Permutation> cell;
    for (Index w = 0; w < G.order(); ++w)
      if (r.shape[w] == lambda) cell.push_back(G.element(w));
    d.twoSidedCells.push_back(std::move(cell));
    d.twoSidedShapes.push_back(lambda);
  }
  return d;
}

bool leqLR(const Permutation& y, const Permutation& w) {
  if (y.size() != w.size()) throw std::invalid_argument("leqLR: permutations of different degree");
  return dominates(rskShape(w), rskShape(y));
}

namespace {

// edges[w] = y with C_y occurring in the product
std::vector<std::vector<Index>> elementaryRelation(int n, Side side) {
  const SymmetricGroup& G = SymmetricGroup::of(n);
  std::vector<std::vector<Index>> edges(G.order());
  std::vector<HeckeElt> generatorsT;
  for (int s = 1; s < n; ++s) generatorsT.push_back(toT(HeckeElt::basisElement(Basis::C, Permutation::simple(n, s))));
  for (Index w = 0; w < G.order(); ++w) {
    const HeckeElt cw = toT(HeckeElt::basisElement(Basis::C, G.element(w)));
    for (const auto& cs : generatorsT) {
      const HeckeElt prod = toC(side == Side::Left ? multiplyT(cs, cw) : multiplyT(cw, cs));
      for (Index y = 0; y < G.order(); ++y)
        if (!prod.coefficient(y).isZero()) edges[w].push_back(y);
    }
  }
  return edges;
}

std::vector<std::vector<char>> closure(const std::vector<std::vector<Index>>& edges) {
  const std::size_t N = edges.size();
  std::vector<std::vector<char>> reach(N, std::vector<char>(N, 0));
  for (Index w = 0; w < N; ++w) {
    std::vector<Index> stack{w};
    reach[w][w] = 1;
    while (!stack.empty()) {
      const Index x = stack.back();
      stack.pop_back();
      for (Index y : edges[x])
        if (!reach[w][y]) {
          reach[w][y] = 1;
          stack.push_back(y);
        }
    }
  }
  return reach;
}

}  // namespace

OperationalPreorder OperationalPreorder::compute(int n, Side side) {
  OperationalPreorder p;
  p.n_ = n;
  if (side == Side::TwoSided) {
    auto edges = elementaryRelation(n, Side::Left);
    const auto right = elementaryRelation(n, Side::Right);
    for (std::size_t w = 0; w < edges.size(); ++w) edges[w].insert(edges[w].end(), right[w].begin(), right[w].end());
    p.reach_ = closure(edges);
  } else {
    p.reach_ = closure(elementaryRelation(n, side));
  }
  return p;
}

bool OperationalPreorder::leq(const Permutation& y, const Permutation& w) const {
  const SymmetricGroup& G = SymmetricGroup::of(n_);
  return leq(G.index(y), G.index(w));
}

std::vector<std::vector<Permutation>> OperationalPreorder::cells() const {
  const SymmetricGroup& G = SymmetricGroup::of(n_);
  std::vector<int> cls(G.order(), -1);
  std::vector<std::vector<Index>> classes;
  for (Index w = 0; w < G.order(); ++w) {
    if (cls[w] >= 0) continue;
    cls[w] = static_cast<int>(classes.size());
    classes.push_back({w});
    for (Index y = w + 1; y < G.order(); ++y)
      if (cls[y] < 0 && leq(y, w) && leq(w, y)) {
        cls[y] = cls[w];
        classes.back().push_back(y);
      }
  }
  return groupBy(classes, G);
}

OperationalPreorder operationalPreorderTwoSided(int n) { return OperationalPreorder::compute(n, Side::TwoSided); }

CellDecomposition cellDecompositionOperational(int n) {
  CellDecomposition d;
  d.n = n;
  d.leftCells = OperationalPreorder::compute(n, Side::Left).cells();
  d.rightCells = OperationalPreorder::compute(n, Side::Right).cells();
  d.twoSidedCells = operationalPreorderTwoSided(n).cells();
  for (const auto& c : d.twoSidedCells) d.twoSidedShapes.push_back(rskShape(c.front()));
  return d;
}

CellModule CellModule::build(const Partition& lambda) {
  return build(lambda, Tableau::columnSuperstandard(lambda));
}

CellModule CellModule::build(const Partition& lambda, const Tableau& anchor) {
  if (anchor.shape() != lambda || !anchor.isStandard())
    throw std::invalid_argument("cell module anchor must be a standard tableau of shape " + lambda.str());
  const int n = lambda.size();
  const SymmetricGroup& G = SymmetricGroup::of(n);
  const KLTable& kl = klTable(n);
  CellModule m;
  m.lambda_ = lambda;
  m.anchor_ = anchor;
  m.tableaux_ = enumerateStandard(lambda);
  m.position_.assign(G.order(), -1);
  for (const auto& q : m.tableaux_) {
    const Index w = G.index(rskInverse(anchor, q));
    m.position_[w] = static_cast<int>(m.elements_.size());
    m.elements_.push_back(w);
  }
  const std::size_t d = m.elements_.size();
  // C_w T_s = C_w C_s + v C_w, with C_w C_s = -(v + v^-1) C_w when ws < w and
  // C_{ws} - sum_{z < w, zs < z} mu(z,w) e_w e_z C_z otherwise
  for (int s = 1; s < n; ++s) {
    PolyMatrix M = zeroMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const Index w = m.elements_[i];
      const Index ws = G.rightMul(w, s);
      if (G.length(ws) < G.length(w)) {
        M[i][i] = LaurentPoly::monomial(-1, -1);
        continue;
      }
      M[i][i] = LaurentPoly::v(1);
      if (m.position_[ws] >= 0) M[i][static_cast<std::size_t>(m.position_[ws])] += 1;
      for (const auto& [z, mu] : kl.muList(w)) {
        if (m.position_[z] < 0 || G.length(G.rightMul(z, s)) > G.length(z)) continue;
        const long long c = mu * epsilon(G.length(w)) * epsilon(G.length(z));
        M[i][static_cast<std::size_t>(m.position_[z])] -= c;
      }
    }
    m.generators_.push_back(std::move(M));
  }
  return m;
}

PolyMatrix CellModule::actionOfT(const Permutation& x) const {
  PolyMatrix M = identityMatrix(dimension());
  for (int s : reducedWord(x)) M = multiply(M, generator(s));
  return M;
}

PolyMatrix CellModule::actionOf(const HeckeElt& h) const {
  if (h.n() != n()) throw std::invalid_argument("Hecke element and cell module of different rank");
  const HeckeElt t = toT(h);
  const SymmetricGroup& G = SymmetricGroup::of(n());
  std::unordered_map<Index, PolyMatrix> memo;
  memo.emplace(G.identityIndex(), identityMatrix(dimension()));
  std::function<const PolyMatrix&(Index)> matrixOf = [&](Index x) -> const PolyMatrix& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    const int s = G.firstRightDescent(x);
    PolyMatrix M = multiply(matrixOf(G.rightMul(x, s)), generator(s));
    return memo.emplace(x, std::move(M)).first->second;
  };
  PolyMatrix out = zeroMatrix(dimension(), dimension());
  for (Index x : G.byLength()) {
    const LaurentPoly& a = t.coefficient(x);
    if (a.isZero()) continue;
    const PolyMatrix& M = matrixOf(x);
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = 0; j < dimension(); ++j)
        if (!M[i][j].isZero()) out[i][j].addProduct(a, M[i][j]);
  }
  return out;
}

namespace {

// Runs the recursion M(C_{ys}) = M(C_y) M(C_s) + sum_{z in mu(y), zs < z} mu(z,y) e_y e_z M(C_z)
// on an arbitrary linear image (whole matrices or single rows).
template <class Value, class TimesCs, class AddScaled>
std::vector<Value> cRecursion(int n, Value identity, TimesCs timesCs, AddScaled addScaled) {
  const SymmetricGroup& G = SymmetricGroup::of(n);
  const KLTable& kl = klTable(n);
  std::vector<Value> out(G.order());
  out[G.identityIndex()] = std::move(identity);
  for (Index y : G.byLength()) {
    if (y == G.identityIndex()) continue;
    const int s = G.firstRightDescent(y);
    const Index x = G.rightMul(y, s);
    Value value = timesCs(out[x], s);
    for (const auto& [z, mu] : kl.muList(x)) {
      if (G.length(G.rightMul(z, s)) > G.length(z)) continue;
      addScaled(value, out[z], mu * epsilon(G.length(x)) * epsilon(G.length(z)));
    }
    out[y] = std::move(value);
  }
  return out;
}

}  // namespace

std::vector<PolyMatrix> CellModule::allCMatrices() const {
  const std::size_t d = dimension();
  std::vector<PolyMatrix> cs;
  for (const auto& g : generators_) {
    PolyMatrix c = g;
    for (std::size_t i = 0; i < d; ++i) c[i][i].addScaled(LaurentPoly(1), -1, 1);
    cs.push_back(std::move(c));
  }
  return cRecursion<PolyMatrix>(
      n(), identityMatrix(d), [&](const PolyMatrix& m, int s) { return multiply(m, cs[static_cast<std::size_t>(s - 1)]); },
      [&](PolyMatrix& acc, const PolyMatrix& m, long long c) {
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            if (!m[i][j].isZero()) acc[i][j].addScaled(m[i][j], c);
      });
}

std::vector<std::vector<LaurentPoly>> CellModule::cRowVectors(std::size_t row) const {
  using Row = std::vector<LaurentPoly>;
  const std::size_t d = dimension();
  std::vector<PolyMatrix> cs;
  for (const auto& g : generators_) {
    PolyMatrix c = g;
    for (std::size_t i = 0; i < d; ++i) c[i][i].addScaled(LaurentPoly(1), -1, 1);
    cs.push_back(std::move(c));
  }
  Row start(d);
  start[row] = 1;
  return cRecursion<Row>(
      n(), start,
      [&](const Row& r, int s) {
        const PolyMatrix& c = cs[static_cast<std::size_t>(s - 1)];
        Row out(d);
        for (std::size_t i = 0; i < d; ++i) {
          if (r[i].isZero()) continue;
          for (std::size_t j = 0; j < d; ++j)
            if (!c[i][j].isZero()) out[j].addProduct(r[i], c[i][j]);
        }
        return out;
      },
      [&](Row& acc, const Row& r, long long c) {
        for (std::size_t j = 0; j < d; ++j)
          if (!r[j].isZero()) acc[j].addScaled(r[j], c);
      });
}

std::vector<PolyMatrix> CellModule::generatorsByProducts() const {
  const std::size_t d = dimension();
  const SymmetricGroup& G = SymmetricGroup::of(n());
  std::vector<PolyMatrix> out;
  for (int s = 1; s < n(); ++s) {
    PolyMatrix M = zeroMatrix(d, d);
    const HeckeElt ts = HeckeElt::basisElement(Basis::T, Permutation::simple(n(), s));
    for (std::size_t i = 0; i < d; ++i) {
      const HeckeElt prod = toC(multiplyT(toT(HeckeElt::basisElement(Basis::C, G.element(elements_[i]))), ts));
      for (std::size_t j = 0; j < d; ++j) M[i][j] = prod.coefficient(elements_[j]);
    }
    out.push_back(std::move(M));
  }
  return out;
}

std::vector<std::pair<Permutation, Permutation>> transportBasis(const CellModule& from, const CellModule& to) {
  if (from.lambda() != to.lambda()) throw std::invalid_argument("cell modules of different shapes are not isomorphic");
  const SymmetricGroup& G = SymmetricGroup::of(from.n());
  std::vector<std::pair<Permutation, Permutation>> out;
  for (std::size_t i = 0; i < from.dimension(); ++i)
    out.emplace_back(G.element(from.basisElements()[i]), G.element(to.basisElements()[i]));
  return out;
}

}  // namespace klrsk
