#include "klrsk/field.hpp"

#include <stdexcept>
#include <vector>

namespace klrsk {

namespace {

std::uint32_t reduce(const BigInt& c, std::uint32_t p) {
  BigInt r = c % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint32_t>();
}

std::uint32_t modInverse(std::uint32_t x, std::uint32_t p) {
  if (x == 0) throw std::domain_error("division by zero in GF(p)");
  std::int64_t a = x, m = p, u = 1, w = 0;
  while (m) {
    const std::int64_t t = a / m;
    a -= t * m;
    std::swap(a, m);
    u -= t * w;
    std::swap(u, w);
  }
  u %= static_cast<std::int64_t>(p);
  if (u < 0) u += p;
  return static_cast<std::uint32_t>(u);
}

}  // namespace

bool isPrime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Scalar Scalar::rational(const BigRational& q) {
  Scalar s;
  s.q_ = q;
  return s;
}

Scalar Scalar::fromInteger(const BigInt& c, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  if (p == 0)
    s.q_ = BigRational(c);
  else
    s.r_ = reduce(c, p);
  return s;
}

const BigRational& Scalar::asRational() const {
  if (p_ != 0) throw std::domain_error("scalar is not rational");
  return q_;
}

std::uint32_t Scalar::residue() const {
  if (p_ == 0) throw std::domain_error("scalar is not in a prime field");
  return r_;
}

void Scalar::sameField(const Scalar& b) const {
  if (p_ != b.p_) throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  sameField(b);
  if (p_ == 0)
    q_ += b.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + b.r_) % p_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b) {
  sameField(b);
  if (p_ == 0)
    q_ *= b.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) * b.r_) % p_);
  return *this;
}

Scalar Scalar::inverse() const {
  Scalar s = *this;
  if (p_ == 0) {
    if (q_.is_zero()) throw std::domain_error("division by zero");
    s.q_ = 1 / q_;
  } else {
    s.r_ = modInverse(r_, p_);
  }
  return s;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  sameField(b);
  return *this *= b.inverse();
}

Scalar Scalar::pow(std::int64_t e) const {
  Scalar base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Scalar result = one(p_);
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::str() const { return p_ == 0 ? q_.str() : std::to_string(r_); }

FieldSpec::FieldSpec(std::uint32_t p, Scalar a) : p_(p), a_(std::move(a)) {
  if (a_.isZero()) throw std::invalid_argument("specialization point must be nonzero");
  if (p_ == 0) {
    if (a_.isOne())
      e_ = ExtNat::infinity();
    else if (a_ == -one())
      e_ = ExtNat(2);
    else
      e_ = ExtNat::infinity();  // no other roots of unity in Q
    return;
  }
  Scalar sum = zero();
  Scalar power = one();
  for (std::uint64_t e = 1; e <= p_; ++e) {
    sum += power;
    if (sum.isZero()) {
      e_ = ExtNat(e);
      return;
    }
    power *= a_;
  }
  e_ = ExtNat::infinity();
}

FieldSpec FieldSpec::rationals(const BigRational& a) { return FieldSpec(0, Scalar::rational(a)); }

FieldSpec FieldSpec::prime(std::uint32_t p, std::int64_t a) {
  if (!isPrime(p)) throw std::invalid_argument("characteristic must be 0 or a prime");
  return FieldSpec(p, Scalar::fromInteger(a, p));
}

std::optional<std::uint64_t> FieldSpec::order() const {
  if (p_ == 0) return std::nullopt;
  return p_;
}

std::string FieldSpec::str() const {
  return (p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")") + " at a=" + a_.str();
}

Scalar specialize(const LaurentPoly& f, const FieldSpec& field) {
  Scalar value = field.zero();
  f.forEachTerm([&](int k, const BigInt& c) { value += field.fromInteger(c) * field.a().pow(k); });
  return value;
}

namespace {

using FieldPoly = std::vector<Scalar>;  // ascending powers of x

FieldPoly toFieldPoly(const LaurentPoly& f, const FieldSpec& field) {
  FieldPoly out;
  const int low = f.lowDegree();
  for (int k = low; k <= f.highDegree(); ++k) out.push_back(field.fromInteger(f.coefficient(k)));
  while (!out.empty() && out.back().isZero()) out.pop_back();
  return out;
}

Scalar evalAt(const FieldPoly& f, const Scalar& a) {
  Scalar value = Scalar::zero(a.characteristic());
  for (std::size_t i = f.size(); i-- > 0;) value = value * a + f[i];
  return value;
}

// Quotient of f by (x - a), assuming f(a) = 0.
FieldPoly divideByRoot(const FieldPoly& f, const Scalar& a) {
  FieldPoly q(f.size() - 1, Scalar::zero(a.characteristic()));
  Scalar carry = Scalar::zero(a.characteristic());
  for (std::size_t i = f.size(); i-- > 1;) {
    carry = carry * a + f[i];
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

std::optional<Scalar> evaluateRatio(const LaurentPoly& num, const LaurentPoly& den, const FieldSpec& field) {
  if (den.isZero()) throw std::domain_error("ratio with zero denominator");
  if (num.isZero()) return field.zero();
  FieldPoly n = toFieldPoly(num, field);
  FieldPoly d = toFieldPoly(den, field);
  if (d.empty()) return std::nullopt;
  if (n.empty()) return field.zero();
  const Scalar& a = field.a();
  while (evalAt(d, a).isZero()) {
    if (!evalAt(n, a).isZero()) return std::nullopt;
    n = divideByRoot(n, a);
    d = divideByRoot(d, a);
  }
  return evalAt(n, a) / evalAt(d, a) * a.pow(num.lowDegree() - den.lowDegree());
}

}  // namespace klrsk
