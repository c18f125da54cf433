#pragma once

#include <vector>

#include "klrsk/combinatorics.hpp"
#include "klrsk/hecke.hpp"
#include "klrsk/linalg.hpp"
#include "klrsk/rsk.hpp"
#include "klrsk/symgroup.hpp"

namespace klrsk {

// RSK data for every element of S_n, indexed like SymmetricGroup::of(n).
struct RskTable {
  std::vector<Tableau> P, Q;
  std::vector<Partition> shape;
};
const RskTable& rskTable(int n);

struct CellDecomposition {
  int n = 0;
  std::vector<std::vector<Permutation>> leftCells;
  std::vector<std::vector<Permutation>> rightCells;
  std::vector<std::vector<Permutation>> twoSidedCells;
  std::vector<Partition> twoSidedShapes;  // parallel to twoSidedCells
};

// left cells = equal Q-symbol, right cells = equal P-symbol, two-sided = equal shape
CellDecomposition cellDecompositionCombinatorial(int n);
bool leqLR(const Permutation& y, const Permutation& w);

enum class Side { Left, Right, TwoSided };

// Preorder generated by "C_y occurs in C_s C_w" (left) or "in C_w C_s" (right).
class OperationalPreorder {
 public:
  static OperationalPreorder compute(int n, Side side);

  int n() const { return n_; }
  bool leq(SymmetricGroup::Index y, SymmetricGroup::Index w) const { return reach_[w][y] != 0; }
  bool leq(const Permutation& y, const Permutation& w) const;
  // equivalence classes, each sorted, ordered by first element
  std::vector<std::vector<Permutation>> cells() const;

 private:
  int n_ = 0;
  std::vector<std::vector<char>> reach_;  // reach_[w][y]: y <= w
};

OperationalPreorder operationalPreorderTwoSided(int n);
CellDecomposition cellDecompositionOperational(int n);

// Right cell module on the cell with P-symbol `anchor`; basis C_{(anchor, Q_i)} with Q_i
// in enumerateStandard order.  Matrices act on row vectors: M(h)[i][j] is the
// coefficient of basis element j in (basis element i) h.
class CellModule {
 public:
  using Index = SymmetricGroup::Index;

  static CellModule build(const Partition& lambda);
  static CellModule build(const Partition& lambda, const Tableau& anchor);

  const Partition& lambda() const { return lambda_; }
  int n() const { return lambda_.size(); }
  std::size_t dimension() const { return elements_.size(); }
  const Tableau& anchor() const { return anchor_; }
  const std::vector<Tableau>& basisTableaux() const { return tableaux_; }
  const std::vector<Index>& basisElements() const { return elements_; }
  // basis position of w, or -1 when w lies outside the cell
  int position(Index w) const { return position_[w]; }

  const PolyMatrix& generator(int s) const { return generators_[static_cast<std::size_t>(s - 1)]; }
  PolyMatrix actionOfT(const Permutation& x) const;
  PolyMatrix actionOf(const HeckeElt& h) const;  // any basis
  // M(C_y) for all y of S_n via the product rule for C_y C_s
  std::vector<PolyMatrix> allCMatrices() const;
  // row vector e_row M(C_y) for all y, same recursion without whole matrices
  std::vector<std::vector<LaurentPoly>> cRowVectors(std::size_t row) const;

  // Generator matrices by multiplying in H and expanding in the C-basis (oracle).
  std::vector<PolyMatrix> generatorsByProducts() const;

 private:
  Partition lambda_;
  Tableau anchor_;
  std::vector<Tableau> tableaux_;
  std::vector<Index> elements_;
  std::vector<int> position_;
  std::vector<PolyMatrix> generators_;
};

// Matrix of the isomorphism R(anchor a) -> R(anchor b) given by C_{(a,Q)} -> C_{(b,Q)}:
// the identity in the respective bases, returned as pairs of corresponding elements.
std::vector<std::pair<Permutation, Permutation>> transportBasis(const CellModule& from, const CellModule& to);

}  // namespace klrsk
