#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "klrsk/extnat.hpp"
#include "klrsk/laurent.hpp"

namespace klrsk {

// Element of Q (characteristic 0) or of GF(p).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  static Scalar rational(const BigRational& q);
  static Scalar fromInteger(const BigInt& c, std::uint32_t p);
  static Scalar zero(std::uint32_t p) { return fromInteger(0, p); }
  static Scalar one(std::uint32_t p) { return fromInteger(1, p); }

  std::uint32_t characteristic() const { return p_; }
  bool isZero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }
  bool isOne() const { return p_ == 0 ? q_ == 1 : r_ == 1; }
  const BigRational& asRational() const;
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  std::uint32_t p_ = 0;
  BigRational q_;
  std::uint32_t r_ = 0;

  void sameField(const Scalar& b) const;
};

// A field together with the point a at which v is specialized.
class FieldSpec {
 public:
  static FieldSpec rationals(const BigRational& a = 1);
  static FieldSpec prime(std::uint32_t p, std::int64_t a = 1);

  std::uint32_t characteristic() const { return p_; }
  const Scalar& a() const { return a_; }
  // least e with 1 + a + ... + a^{e-1} = 0
  const ExtNat& e() const { return e_; }
  // characteristic as an element of N u {inf}; char 0 gives inf
  ExtNat pAsExt() const { return p_ == 0 ? ExtNat::infinity() : ExtNat(p_); }
  std::optional<std::uint64_t> order() const;

  Scalar zero() const { return Scalar::zero(p_); }
  Scalar one() const { return Scalar::one(p_); }
  Scalar fromInteger(const BigInt& c) const { return Scalar::fromInteger(c, p_); }

  std::string str() const;

 private:
  std::uint32_t p_ = 0;
  Scalar a_;
  ExtNat e_;

  FieldSpec(std::uint32_t p, Scalar a);
};

Scalar specialize(const LaurentPoly& f, const FieldSpec& field);

// Value at v = a of num/den after cancelling common factors (v - a); nullopt on a pole.
std::optional<Scalar> evaluateRatio(const LaurentPoly& num, const LaurentPoly& den, const FieldSpec& field);

bool isPrime(std::uint64_t p);

}  // namespace klrsk
