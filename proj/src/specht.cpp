#include "klrsk/specht.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "klrsk/rsk.hpp"

namespace klrsk {

namespace {

using Index = SymmetricGroup::Index;

int epsilon(int length) { return length % 2 ? -1 : 1; }

// sum over the parts of lambda of binomial(part, 2)
int longestParabolicLength(const Partition& lambda) {
  int l = 0;
  for (int p : lambda.parts()) l += p * (p - 1) / 2;
  return l;
}

}  // namespace

int CosetTable::position(const Permutation& d) const {
  return indexOf[SymmetricGroup::of(lambda.size()).index(d)];
}

std::shared_ptr<const CosetTable> cosetTable(const Partition& lambda) {
  static std::mutex m;
  static std::map<Partition, std::shared_ptr<const CosetTable>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[lambda];
  if (!slot) {
    const int n = lambda.size();
    const SymmetricGroup& G = SymmetricGroup::of(n);
    auto t = std::make_shared<CosetTable>();
    t->lambda = lambda;
    t->parabolic = parabolic(lambda);
    t->reps = t->parabolic.distinguished;
    t->indexOf.assign(G.order(), -1);
    for (std::size_t i = 0; i < t->reps.size(); ++i) {
      t->indexOf[G.index(t->reps[i])] = static_cast<int>(i);
      t->length.push_back(t->reps[i].length());
    }
    for (int s = 1; s < n; ++s) {
      std::vector<int> row;
      for (const auto& d : t->reps) row.push_back(t->indexOf[G.rightMul(G.index(d), s)]);
      t->step.push_back(std::move(row));
    }
    slot = std::move(t);
  }
  return slot;
}

PermutationModuleElt::PermutationModuleElt(const Partition& lambda)
    : table_(cosetTable(lambda)), coords_(table_->reps.size()) {}

PermutationModuleElt PermutationModuleElt::basisVector(const Partition& lambda, const Permutation& d, const LaurentPoly& c) {
  PermutationModuleElt m(lambda);
  const int i = m.table().position(d);
  if (i < 0) throw std::invalid_argument(d.str() + " is not a distinguished coset representative for " + lambda.str());
  m.coords_[static_cast<std::size_t>(i)] = c;
  return m;
}

const LaurentPoly& PermutationModuleElt::coordinate(const Permutation& d) const {
  const int i = table_->position(d);
  if (i < 0) throw std::invalid_argument(d.str() + " is not a distinguished coset representative");
  return coords_[static_cast<std::size_t>(i)];
}

bool PermutationModuleElt::isZero() const {
  for (const auto& c : coords_)
    if (!c.isZero()) return false;
  return true;
}

PermutationModuleElt PermutationModuleElt::actGenerator(int s) const {
  PermutationModuleElt out(lambda());
  const auto& step = table_->step[static_cast<std::size_t>(s - 1)];
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const LaurentPoly& c = coords_[i];
    if (c.isZero()) continue;
    const int j = step[i];
    if (j < 0) {
      // ds = s'd with s' in W_lambda, and x_lambda T_{s'} = v x_lambda
      out.coords_[i].addScaled(c, 1, 1);
      continue;
    }
    const auto uj = static_cast<std::size_t>(j);
    out.coords_[uj] += c;
    if (table_->length[uj] < table_->length[i]) {
      out.coords_[i].addScaled(c, 1, 1);
      out.coords_[i].addScaled(c, -1, -1);
    }
  }
  return out;
}

PermutationModuleElt& PermutationModuleElt::operator+=(const PermutationModuleElt& o) {
  if (lambda() != o.lambda()) throw std::invalid_argument("permutation module elements of different shapes");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

PermutationModuleElt& PermutationModuleElt::operator-=(const PermutationModuleElt& o) {
  if (lambda() != o.lambda()) throw std::invalid_argument("permutation module elements of different shapes");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

PermutationModuleElt& PermutationModuleElt::operator*=(const LaurentPoly& c) {
  for (auto& x : coords_)
    if (!x.isZero()) x = x * c;
  return *this;
}

std::string PermutationModuleElt::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].isZero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coords_[i].str() + ")x*T[" + table_->reps[i].str() + "]";
  }
  return s.empty() ? "0" : s;
}

PermutationModuleElt actOnM(const PermutationModuleElt& m, const HeckeElt& h) {
  if (h.n() != m.lambda().size()) throw std::invalid_argument("Hecke element and module of different rank");
  const HeckeElt t = toT(h);
  const SymmetricGroup& G = t.group();
  std::unordered_map<Index, PermutationModuleElt> memo;
  memo.emplace(G.identityIndex(), m);
  std::function<const PermutationModuleElt&(Index)> times = [&](Index x) -> const PermutationModuleElt& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    const int s = G.firstRightDescent(x);
    PermutationModuleElt r = times(G.rightMul(x, s)).actGenerator(s);
    return memo.emplace(x, std::move(r)).first->second;
  };
  PermutationModuleElt out(m.lambda());
  for (Index x : G.byLength()) {
    const LaurentPoly& a = t.coefficient(x);
    if (a.isZero()) continue;
    const PermutationModuleElt& part = times(x);
    for (std::size_t i = 0; i < out.dimension(); ++i)
      if (!part.coords()[i].isZero()) out.coords()[i].addProduct(a, part.coords()[i]);
  }
  return out;
}

PermutationModuleElt actOnMViaAlgebra(const PermutationModuleElt& m, const HeckeElt& h) {
  const Partition& lambda = m.lambda();
  const int n = lambda.size();
  const HeckeElt x = xLambda(lambda);
  HeckeElt elt(n, Basis::T);
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m.coords()[i].isZero()) continue;
    elt += m.coords()[i] * multiplyT(x, HeckeElt::basisElement(Basis::T, m.table().reps[i]));
  }
  const HeckeElt prod = multiplyT(elt, toT(h));
  PermutationModuleElt out(lambda);
  for (std::size_t i = 0; i < out.dimension(); ++i) out.coords()[i] = prod.coefficient(m.table().reps[i]);
  return out;
}

LaurentPoly bilinearForm(const PermutationModuleElt& a, const PermutationModuleElt& b) {
  if (a.lambda() != b.lambda()) throw std::invalid_argument("bilinear form on elements of different shapes");
  LaurentPoly out;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (!a.coords()[i].isZero() && !b.coords()[i].isZero()) out.addProduct(a.coords()[i], b.coords()[i]);
  return out;
}

PermutationModuleElt theta(const Partition& lambda, const HeckeElt& m) {
  const Permutation& wl = cosetTable(lambda)->parabolic.wLambda;
  return actOnM(PermutationModuleElt::basisVector(lambda, wl, LaurentPoly::v(wl.length())), m);
}

PermutationModuleElt zLambdaInM(const Partition& lambda) { return theta(lambda, yLambda(lambda.transpose())); }

SpechtBasis spechtBasis(const Partition& lambda) {
  SpechtBasis b;
  b.lambda = lambda;
  b.prefixList = prefixes(parabolic(lambda.transpose()).wLambda);
  const PermutationModuleElt z = zLambdaInM(lambda);
  for (const auto& e : b.prefixList)
    b.vectors.push_back(LaurentPoly::v(e.length()) * actOnM(z, HeckeElt::basisElement(Basis::T, e)));
  return b;
}

namespace {

PolyMatrix gramOf(const std::vector<PermutationModuleElt>& vs) {
  PolyMatrix g = zeroMatrix(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) g[i][j] = g[j][i] = bilinearForm(vs[i], vs[j]);
  return g;
}

}  // namespace

PolyMatrix gramMatrix(const Partition& lambda) { return gramOf(spechtBasis(lambda).vectors); }

LaurentPoly gramDet(const Partition& lambda) { return determinant(gramMatrix(lambda)); }

PolyMatrix cellGramCBasis(const Partition& lambda) {
  const CellModule cm = CellModule::build(lambda);
  const SymmetricGroup& G = SymmetricGroup::of(lambda.size());
  std::vector<PermutationModuleElt> images;
  for (Index w : cm.basisElements()) images.push_back(theta(lambda, HeckeElt::basisElement(Basis::C, G.element(w))));
  return gramOf(images);
}

PolyMatrix cellGramTBasis(const Partition& lambda) {
  const Permutation w0 = parabolic(lambda.transpose()).w0;
  const HeckeElt c0 = toT(HeckeElt::basisElement(Basis::C, w0));
  std::vector<PermutationModuleElt> images;
  for (const auto& e : prefixes(parabolic(lambda.transpose()).wLambda))
    images.push_back(theta(lambda, multiplyT(c0, HeckeElt::basisElement(Basis::T, e))));
  return gramOf(images);
}

LaurentPoly cellGramDetFromG(const Partition& lambda, const LaurentPoly& detG) {
  const auto d = static_cast<int>(countStandard(lambda));
  const int l0 = longestParabolicLength(lambda.transpose());
  const int lw = parabolic(lambda).wLambda.length();
  const int sign = d % 2 && epsilon(l0) < 0 ? -1 : 1;
  return LaurentPoly::monomial(sign, d * l0 + 2 * d * lw) * detG;
}

GMatrix gMatrix(const Partition& lambda) {
  const CellModule cm = CellModule::build(lambda);
  const SymmetricGroup& G = SymmetricGroup::of(lambda.size());
  const auto& P = cm.basisTableaux();
  const std::size_t m = P.size();
  std::vector<Index> cellCol;  // C(P_k, P_1)
  for (std::size_t k = 0; k < m; ++k) cellCol.push_back(G.index(rskInverse(P[k], P[0])));
  GMatrix g{lambda, zeroMatrix(m, m)};
  for (std::size_t j = 0; j < m; ++j) {
    const auto rows = cm.cRowVectors(j);
    for (std::size_t k = 0; k < m; ++k) g.entries[k][j] = rows[cellCol[k]][0];
  }
  return g;
}

GMatrix gMatrixAt(const Partition& lambda, std::size_t i, std::size_t l) {
  const auto P = enumerateStandard(lambda);
  const std::size_t m = P.size();
  if (i < 1 || i > m || l < 1 || l > m) throw std::out_of_range("tableau index out of range");
  const CellModule cm = CellModule::build(lambda, P[i - 1]);
  GMatrix g{lambda, zeroMatrix(m, m)};
  for (std::size_t k = 0; k < m; ++k) {
    const PolyMatrix M = cm.actionOf(HeckeElt::basisElement(Basis::C, rskInverse(P[k], P[l - 1])));
    for (std::size_t j = 0; j < m; ++j) g.entries[k][j] = M[j][l - 1];
  }
  return g;
}

PolyMatrix bigMatrix(const Partition& lambda) {
  const CellModule cm = CellModule::build(lambda);
  const SymmetricGroup& G = SymmetricGroup::of(lambda.size());
  const auto& P = cm.basisTableaux();
  const std::size_t m = P.size();
  const auto all = cm.allCMatrices();
  PolyMatrix big = zeroMatrix(m * m, m * m);
  // row (k,l) holds the coefficients alpha_i^j of C(1,i) C(k,l) = sum_j alpha_i^j C(1,j)
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) {
      const PolyMatrix& M = all[G.index(rskInverse(P[k], P[l]))];
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) big[l * m + k][j * m + i] = M[i][j];
    }
  return big;
}

bool isBlockScalar(const PolyMatrix& big, const PolyMatrix& block) {
  const std::size_t m = block.size();
  if (big.size() != m * m) return false;
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) {
          const LaurentPoly& x = big[l * m + k][j * m + i];
          if (j == l ? !(x == block[k][i]) : !x.isZero()) return false;
        }
  return true;
}

std::vector<HookFactor> hookFactors(const Partition& lambda) {
  const auto hooks = hookLengths(lambda);
  const std::vector<int> beta = betaSequence(lambda);
  std::vector<HookFactor> out;
  for (int a = 0; a < lambda.rows(); ++a)
    for (int b = a + 1; b < lambda.rows(); ++b)
      for (int c = 0; c < lambda[b]; ++c) {
        const int hac = hooks[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
        const int hbc = hooks[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        std::vector<int> shifted = beta;
        shifted[static_cast<std::size_t>(a)] += hbc;
        shifted[static_cast<std::size_t>(b)] -= hbc;
        const std::int64_t e = signedD(shifted);
        if (e != 0) out.push_back({a + 1, b + 1, c + 1, hac, hbc, e});
      }
  return out;
}

LaurentPoly hookFormulaDet(const Partition& lambda) {
  LaurentPoly num(1), den(1);
  for (const auto& f : hookFactors(lambda)) {
    const auto e = static_cast<unsigned>(f.exponent > 0 ? f.exponent : -f.exponent);
    const LaurentPoly top = pow(quantumIntV(f.hookAC), e);
    const LaurentPoly bottom = pow(quantumIntV(f.hookBC), e);
    if (f.exponent > 0) {
      num *= top;
      den *= bottom;
    } else {
      num *= bottom;
      den *= top;
    }
  }
  auto q = divideExact(num, den);
  if (!q) throw std::logic_error("hook formula product is not a Laurent polynomial for " + lambda.str());
  const auto d = countStandard(lambda);
  if (d % 2 && epsilon(longestParabolicLength(lambda.transpose())) < 0) *q = -*q;
  return *q;
}

bool gramRelationCheck(const Partition& lambda) {
  const LaurentPoly detG = determinant(gMatrix(lambda).entries);
  const auto d = static_cast<int>(countStandard(lambda));
  const int l0 = longestParabolicLength(lambda.transpose());
  const int lw = parabolic(lambda).wLambda.length();
  int prefixLength = 0;
  for (const auto& e : prefixes(parabolic(lambda.transpose()).wLambda)) prefixLength += e.length();
  const int sign = d % 2 && epsilon(l0) < 0 ? -1 : 1;
  // det G (prod v_e)^2 v_{w_lambda}^{2d} = (e v_{w0,lambda'})^d <S>
  const LaurentPoly lhs = detG.shifted(2 * prefixLength + 2 * d * lw);
  const LaurentPoly rhs = LaurentPoly::monomial(sign, d * l0) * gramDet(lambda);
  return lhs == rhs;
}

bool specializedDetNonzero(const LaurentPoly& detG, const FieldSpec& field) {
  return !specialize(detG, field).isZero();
}

bool specializedDetNonzero(const Partition& lambda, const FieldSpec& field) {
  return specializedDetNonzero(determinant(gMatrix(lambda).entries), field);
}

CarterReport carterCertificate(const Partition& lambda, const FieldSpec& field) {
  CarterReport r;
  const PowerDiagram diagram = powerDiagram(lambda, field.e(), field.pAsExt());
  r.carter = carterCondition(diagram);
  bool columnsConstant = true;
  for (std::size_t row = 1; row < diagram.values.size(); ++row)
    for (std::size_t c = 0; c < diagram.values[row].size(); ++c)
      if (diagram.values[row][c] != diagram.values[0][c]) columnsConstant = false;
  r.reportedShape = columnsConstant ? lambda : lambda.transpose();
  const LaurentPoly detG = determinant(gMatrix(lambda).entries);
  r.detNonzero = specializedDetNonzero(detG, field);
  r.reportedDetNonzero =
      r.reportedShape == lambda ? r.detNonzero : specializedDetNonzero(determinant(gMatrix(r.reportedShape).entries), field);
  r.factorsNonzero = true;
  for (const auto& f : hookFactors(r.reportedShape)) {
    FactorReport fr{f, evaluateRatio(quantumIntV(f.hookAC), quantumIntV(f.hookBC), field)};
    if (!fr.value || fr.value->isZero()) r.factorsNonzero = false;
    r.factors.push_back(std::move(fr));
  }
  r.implicationHolds = !r.carter || (r.factorsNonzero && r.reportedDetNonzero);
  return r;
}

std::string irreducibilityName(Irreducibility r) {
  switch (r) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

std::vector<Scalar> rowTimes(const std::vector<Scalar>& row, const ScalarMatrix& M, const FieldSpec& field) {
  std::vector<Scalar> out(M.empty() ? 0 : M[0].size(), field.zero());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].isZero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!M[i][j].isZero()) out[j] += row[i] * M[i][j];
  }
  return out;
}

ScalarMatrix matTimes(const ScalarMatrix& A, const ScalarMatrix& B, const FieldSpec& field) {
  ScalarMatrix out;
  for (const auto& row : A) out.push_back(rowTimes(row, B, field));
  return out;
}

}  // namespace

std::vector<ScalarMatrix> spechtActionMatrices(const Partition& lambda, const FieldSpec& field) {
  const SpechtBasis b = spechtBasis(lambda);
  const std::uint32_t p = field.characteristic();
  ScalarMatrix B;
  for (const auto& v : b.vectors) {
    std::vector<Scalar> row;
    for (const auto& c : v.coords()) row.push_back(specialize(c, field));
    B.push_back(std::move(row));
  }
  if (rank(B, p) != B.size())
    throw std::logic_error("specialized standard basis of S^" + lambda.str() + " is dependent over " + field.str());
  std::vector<ScalarMatrix> out;
  for (int s = 1; s < lambda.size(); ++s) {
    ScalarMatrix M;
    for (const auto& v : b.vectors) {
      std::vector<Scalar> target;
      const PermutationModuleElt moved = v.actGenerator(s);
      for (const auto& c : moved.coords()) target.push_back(specialize(c, field));
      auto x = solveInRowSpan(B, target, p);
      if (!x) throw std::logic_error("S^" + lambda.str() + " is not stable under T_" + std::to_string(s));
      M.push_back(std::move(*x));
    }
    out.push_back(std::move(M));
  }
  return out;
}

Irreducibility irreducibilityOracle(const Partition& lambda, const FieldSpec& field, std::uint64_t bound) {
  const std::uint64_t d = countStandard(lambda);
  if (d == 1) return Irreducibility::Irreducible;
  const std::uint32_t p = field.characteristic();
  if (p != 0) {
    BigInt size = 1;
    for (std::uint64_t i = 0; i < d; ++i) size *= *field.order();
    if (size > bound) return Irreducibility::Infeasible;
  }
  const auto gens = spechtActionMatrices(lambda, field);
  const auto dim = static_cast<std::size_t>(d);

  if (p == 0) {
    // dimension of the algebra generated by the action matrices
    RowSpace span(dim * dim, 0);
    auto flat = [](const ScalarMatrix& M) {
      std::vector<Scalar> v;
      for (const auto& row : M) v.insert(v.end(), row.begin(), row.end());
      return v;
    };
    ScalarMatrix id(dim, std::vector<Scalar>(dim, field.zero()));
    for (std::size_t i = 0; i < dim; ++i) id[i][i] = field.one();
    std::vector<ScalarMatrix> queue{id};
    span.insert(flat(id));
    for (std::size_t q = 0; q < queue.size() && span.rank() < dim * dim; ++q)
      for (const auto& g : gens) {
        ScalarMatrix next = matTimes(queue[q], g, field);
        if (span.insert(flat(next))) queue.push_back(std::move(next));
      }
    return span.rank() == dim * dim ? Irreducibility::Irreducible : Irreducibility::Reducible;
  }

  // spin every vector whose first nonzero coordinate is 1
  const std::uint64_t q = *field.order();
  std::vector<std::uint64_t> digits(dim, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < dim) {
      if (++digits[k] < q) break;
      digits[k++] = 0;
    }
    if (k == dim) break;
    std::size_t lead = dim;
    for (std::size_t i = dim; i-- > 0;)
      if (digits[i] != 0) {
        lead = i;
        break;
      }
    if (digits[lead] != 1) continue;
    std::vector<Scalar> v;
    for (auto x : digits) v.push_back(field.fromInteger(static_cast<long long>(x)));
    RowSpace spin(dim, p);
    spin.insert(v);
    std::vector<std::vector<Scalar>> queue{v};
    for (std::size_t i = 0; i < queue.size() && spin.rank() < dim; ++i)
      for (const auto& g : gens) {
        auto w = rowTimes(queue[i], g, field);
        if (spin.insert(w)) queue.push_back(std::move(w));
      }
    if (spin.rank() < dim) return Irreducibility::Reducible;
  }
  return Irreducibility::Irreducible;
}

}  // namespace klrsk
