#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace klrsk {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Element of Z[v, v^-1].  Stored densely from the lowest nonzero exponent;
// the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: constants convert implicitly
  explicit LaurentPoly(const BigInt& c);

  static LaurentPoly monomial(const BigInt& c, int exponent);
  static LaurentPoly v(int exponent = 1) { return monomial(1, exponent); }
  static LaurentPoly fromTerms(const std::map<int, BigInt>& terms);

  bool isZero() const { return coeffs_.empty(); }
  bool isOne() const;
  int lowDegree() const;   // throws on zero
  int highDegree() const;  // throws on zero
  BigInt coefficient(int exponent) const;
  std::map<int, BigInt> terms() const;
  std::size_t termCount() const;

  template <class F>
  void forEachTerm(F&& f) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) f(low_ + static_cast<int>(i), coeffs_[i]);
  }

  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;  // times v^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const BigInt& c);

  // this += c * v^k * f
  void addScaled(const LaurentPoly& f, const BigInt& c, int k = 0);
  // this += f * g
  void addProduct(const LaurentPoly& f, const LaurentPoly& g);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;
  static LaurentPoly parse(std::string_view text);
  nlohmann::json toJson() const;
  static LaurentPoly fromJson(const nlohmann::json& j);

 private:
  int low_ = 0;
  std::vector<BigInt> coeffs_;

  void trim();
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

LaurentPoly pow(const LaurentPoly& f, unsigned e);

// Quotient when den divides num exactly in Z[v, v^-1], otherwise nullopt.
std::optional<LaurentPoly> divideExact(const LaurentPoly& num, const LaurentPoly& den);

// [m]_v = v^{1-m} + v^{3-m} + ... + v^{m-1}
LaurentPoly quantumIntV(int m);
// [m]_q = 1 + v^2 + ... + v^{2(m-1)}
LaurentPoly quantumIntQ(int m);

}  // namespace klrsk
