#include "klrsk/linalg.hpp"

#include <stdexcept>

namespace klrsk {

PolyMatrix identityMatrix(std::size_t n) {
  PolyMatrix m = zeroMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

PolyMatrix zeroMatrix(std::size_t rows, std::size_t cols) {
  return PolyMatrix(rows, std::vector<LaurentPoly>(cols));
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  if (a[0].size() != inner) throw std::invalid_argument("matrix size mismatch");
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  PolyMatrix out = zeroMatrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].isZero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].isZero()) out[i][j].addProduct(a[i][k], b[k][j]);
    }
  return out;
}

PolyMatrix add(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) throw std::invalid_argument("matrix size mismatch");
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  }
  return out;
}

PolyMatrix scale(const PolyMatrix& a, const LaurentPoly& c) {
  PolyMatrix out = a;
  for (auto& row : out)
    for (auto& x : row) x = x * c;
  return out;
}

PolyMatrix transpose(const PolyMatrix& a) {
  if (a.empty()) return {};
  PolyMatrix out = zeroMatrix(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

bool isZero(const PolyMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.isZero()) return false;
  return true;
}

LaurentPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    // smallest nonzero pivot keeps intermediate entries short
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m[i][k].isZero() && (pivot == n || m[i][k].termCount() < m[pivot][k].termCount())) pivot = i;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly t = m[k][k] * m[i][j];
        t -= m[i][k] * m[k][j];
        auto q = divideExact(t, prev);
        if (!q) throw std::logic_error("inexact division in fraction-free elimination");
        m[i][j] = std::move(*q);
      }
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

ScalarMatrix specialize(const PolyMatrix& m, const FieldSpec& field) {
  ScalarMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].push_back(specialize(x, field));
  return out;
}

RowSpace::RowSpace(std::size_t dimension, std::uint32_t characteristic)
    : dim_(dimension), p_(characteristic), pivotRow_(dimension, -1) {}

bool RowSpace::reduce(std::vector<Scalar>& acc) const {
  bool nonzero = false;
  for (std::size_t col = 0; col < dim_; ++col) {
    if (acc[col].isZero()) continue;
    const std::int64_t r = pivotRow_[col];
    if (r < 0) {
      nonzero = true;
      continue;
    }
    const Scalar factor = acc[col];
    for (const auto& [c, x] : rows_[static_cast<std::size_t>(r)].entries) acc[c] -= factor * x;
  }
  return nonzero;
}

void RowSpace::addReduced(std::vector<Scalar>& acc) {
  std::size_t pivot = 0;
  while (acc[pivot].isZero()) ++pivot;
  const Scalar inv = acc[pivot].inverse();
  Row row;
  for (std::size_t c = pivot; c < dim_; ++c)
    if (!acc[c].isZero()) row.entries.emplace_back(c, acc[c] * inv);
  pivotRow_[pivot] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(row));
}

bool RowSpace::insert(const std::vector<Scalar>& v) {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<Scalar> acc = v;
  if (!reduce(acc)) return false;
  addReduced(acc);
  return true;
}

bool RowSpace::insertSparse(const std::vector<std::pair<std::size_t, Scalar>>& v) {
  std::vector<Scalar> acc(dim_, Scalar::zero(p_));
  for (const auto& [c, x] : v) acc.at(c) += x;
  if (!reduce(acc)) return false;
  addReduced(acc);
  return true;
}

bool RowSpace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<Scalar> acc = v;
  return !reduce(acc);
}

std::size_t rank(const ScalarMatrix& rows, std::uint32_t characteristic) {
  if (rows.empty()) return 0;
  RowSpace space(rows[0].size(), characteristic);
  for (const auto& r : rows) space.insert(r);
  return space.rank();
}

std::optional<std::vector<Scalar>> solveInRowSpan(const ScalarMatrix& basis, const std::vector<Scalar>& target,
                                                  std::uint32_t characteristic) {
  const std::size_t k = basis.size();
  const std::size_t dim = target.size();
  // columns of the system are the basis rows; last column is the target
  ScalarMatrix sys(dim, std::vector<Scalar>(k + 1, Scalar::zero(characteristic)));
  for (std::size_t i = 0; i < k; ++i) {
    if (basis[i].size() != dim) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t c = 0; c < dim; ++c) sys[c][i] = basis[i][c];
  }
  for (std::size_t c = 0; c < dim; ++c) sys[c][k] = target[c];
  std::vector<std::size_t> pivotCol;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < dim; ++col) {
    std::size_t piv = row;
    while (piv < dim && sys[piv][col].isZero()) ++piv;
    if (piv == dim) continue;
    std::swap(sys[piv], sys[row]);
    const Scalar inv = sys[row][col].inverse();
    for (auto& x : sys[row]) x *= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == row || sys[r][col].isZero()) continue;
      const Scalar f = sys[r][col];
      for (std::size_t c = col; c <= k; ++c) sys[r][c] -= f * sys[row][c];
    }
    pivotCol.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < dim; ++r)
    if (!sys[r][k].isZero()) return std::nullopt;
  if (pivotCol.size() != k) throw std::invalid_argument("basis rows are dependent");
  std::vector<Scalar> x(k, Scalar::zero(characteristic));
  for (std::size_t r = 0; r < pivotCol.size(); ++r) x[pivotCol[r]] = sys[r][k];
  return x;
}

}  // namespace klrsk
