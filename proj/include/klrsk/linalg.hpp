#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "klrsk/field.hpp"
#include "klrsk/laurent.hpp"

namespace klrsk {

template <class T>
using Matrix = std::vector<std::vector<T>>;

using PolyMatrix = Matrix<LaurentPoly>;
using ScalarMatrix = Matrix<Scalar>;

PolyMatrix identityMatrix(std::size_t n);
PolyMatrix zeroMatrix(std::size_t rows, std::size_t cols);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix scale(const PolyMatrix& a, const LaurentPoly& c);
PolyMatrix transpose(const PolyMatrix& a);
bool isZero(const PolyMatrix& a);

// Fraction-free elimination; every division is exact.
LaurentPoly determinant(PolyMatrix m);

ScalarMatrix specialize(const PolyMatrix& m, const FieldSpec& field);

// Incrementally maintained row echelon form over Q or GF(p).
class RowSpace {
 public:
  RowSpace(std::size_t dimension, std::uint32_t characteristic);

  // Adds v; returns true when v was independent of the rows so far.
  bool insert(const std::vector<Scalar>& v);
  bool insertSparse(const std::vector<std::pair<std::size_t, Scalar>>& v);
  bool contains(const std::vector<Scalar>& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dim_; }

 private:
  struct Row {
    std::vector<std::pair<std::size_t, Scalar>> entries;  // pivot first, pivot entry 1
  };
  std::size_t dim_;
  std::uint32_t p_;
  std::vector<Row> rows_;
  std::vector<std::int64_t> pivotRow_;  // column -> row or -1

  bool reduce(std::vector<Scalar>& acc) const;  // true when nonzero remains
  void addReduced(std::vector<Scalar>& acc);
};

std::size_t rank(const ScalarMatrix& rows, std::uint32_t characteristic);

// Solution x of x * basis = target (basis rows independent), or nullopt when target is outside the span.
std::optional<std::vector<Scalar>> solveInRowSpan(const ScalarMatrix& basis, const std::vector<Scalar>& target,
                                                  std::uint32_t characteristic);

}  // namespace klrsk
