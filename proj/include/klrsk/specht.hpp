#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "klrsk/cells.hpp"
#include "klrsk/combinatorics.hpp"
#include "klrsk/field.hpp"
#include "klrsk/hecke.hpp"
#include "klrsk/linalg.hpp"
#include "klrsk/symgroup.hpp"

namespace klrsk {

// Distinguished right coset representatives D_lambda with the T_s action on x_lambda T_d.
struct CosetTable {
  Partition lambda;
  ParabolicData parabolic;
  std::vector<Permutation> reps;  // D_lambda, lexicographic
  std::vector<int> indexOf;       // group index -> position in reps, or -1
  // step[s-1][i]: position of reps[i] s when it is distinguished, else -1
  std::vector<std::vector<int>> step;
  std::vector<int> length;

  int position(const Permutation& d) const;
};
std::shared_ptr<const CosetTable> cosetTable(const Partition& lambda);

// Element of M^lambda = x_lambda H, coordinates in the basis x_lambda T_d, d in D_lambda.
class PermutationModuleElt {
 public:
  explicit PermutationModuleElt(const Partition& lambda);
  static PermutationModuleElt basisVector(const Partition& lambda, const Permutation& d, const LaurentPoly& c = 1);

  const Partition& lambda() const { return table_->lambda; }
  const CosetTable& table() const { return *table_; }
  std::size_t dimension() const { return coords_.size(); }
  const std::vector<LaurentPoly>& coords() const { return coords_; }
  std::vector<LaurentPoly>& coords() { return coords_; }
  const LaurentPoly& coordinate(const Permutation& d) const;
  bool isZero() const;

  PermutationModuleElt actGenerator(int s) const;  // m T_s

  PermutationModuleElt& operator+=(const PermutationModuleElt& o);
  PermutationModuleElt& operator-=(const PermutationModuleElt& o);
  PermutationModuleElt& operator*=(const LaurentPoly& c);
  friend PermutationModuleElt operator*(const LaurentPoly& c, PermutationModuleElt m) { return m *= c; }
  friend bool operator==(const PermutationModuleElt& a, const PermutationModuleElt& b) {
    return a.lambda() == b.lambda() && a.coords_ == b.coords_;
  }

  std::string str() const;

 private:
  std::shared_ptr<const CosetTable> table_;
  std::vector<LaurentPoly> coords_;
};

PermutationModuleElt actOnM(const PermutationModuleElt& m, const HeckeElt& h);
// Same product computed inside H: (sum_d m_d x_lambda T_d) h, read off at the T_d, d in D_lambda.
PermutationModuleElt actOnMViaAlgebra(const PermutationModuleElt& m, const HeckeElt& h);
LaurentPoly bilinearForm(const PermutationModuleElt& a, const PermutationModuleElt& b);

// theta: m -> v_{w_lambda} x_lambda T_{w_lambda} m, from the right ideal C_{w_{0,lambda'}} H into M^lambda
PermutationModuleElt theta(const Partition& lambda, const HeckeElt& m);

struct SpechtBasis {
  Partition lambda;
  std::vector<Permutation> prefixList;  // prefixes of w_{lambda'}
  std::vector<PermutationModuleElt> vectors;  // v_e z_lambda T_e
};
PermutationModuleElt zLambdaInM(const Partition& lambda);
SpechtBasis spechtBasis(const Partition& lambda);

PolyMatrix gramMatrix(const Partition& lambda);
LaurentPoly gramDet(const Partition& lambda);

// Form pulled back to R(lambda) through theta, on the C-basis C(1,i) and on the T-basis
// C_{w_{0,lambda'}} T_e.
PolyMatrix cellGramCBasis(const Partition& lambda);
PolyMatrix cellGramTBasis(const Partition& lambda);
// e^d v_{w0,lambda'}^d v_{w_lambda}^{2d} det G(lambda)
LaurentPoly cellGramDetFromG(const Partition& lambda, const LaurentPoly& detG);

struct GMatrix {
  Partition lambda;
  PolyMatrix entries;  // entries[k][j] = g_j^k
};
GMatrix gMatrix(const Partition& lambda);
// g_j^k read off C(P_i,P_j) C(P_k,P_l) with i, l given (1-based)
GMatrix gMatrixAt(const Partition& lambda, std::size_t i, std::size_t l);
PolyMatrix bigMatrix(const Partition& lambda);
bool isBlockScalar(const PolyMatrix& big, const PolyMatrix& block);

struct HookFactor {
  int a, b, c;  // rows a < b, column c, 1-based
  int hookAC, hookBC;
  std::int64_t exponent;
};
std::vector<HookFactor> hookFactors(const Partition& lambda);
LaurentPoly hookFormulaDet(const Partition& lambda);

bool gramRelationCheck(const Partition& lambda);
bool specializedDetNonzero(const Partition& lambda, const FieldSpec& field);
bool specializedDetNonzero(const LaurentPoly& detG, const FieldSpec& field);

struct FactorReport {
  HookFactor factor;
  std::optional<Scalar> value;  // [h_ac]/[h_bc] at v = a; nullopt when it has a pole
};
// When only the rows of the power diagram are constant the factors are those of lambda',
// whose Specht module is irreducible exactly when that of lambda is.
struct CarterReport {
  bool carter = false;
  Partition reportedShape;  // lambda, or lambda' when only the rows are constant
  bool detNonzero = false;  // det G(lambda) at v = a
  bool reportedDetNonzero = false;  // det G(reportedShape) at v = a
  std::vector<FactorReport> factors;  // of reportedShape
  bool factorsNonzero = false;
  bool implicationHolds = false;  // carter => factors and det G(reportedShape) nonzero
};
CarterReport carterCertificate(const Partition& lambda, const FieldSpec& field);

enum class Irreducibility { Irreducible, Reducible, Infeasible };
std::string irreducibilityName(Irreducibility r);

// Action matrices of T_s on the specialized standard basis of S^lambda_k.
std::vector<ScalarMatrix> spechtActionMatrices(const Partition& lambda, const FieldSpec& field);
Irreducibility irreducibilityOracle(const Partition& lambda, const FieldSpec& field, std::uint64_t bound = 1000000);

}  // namespace klrsk
