#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace klrsk {

// A positive integer or infinity.
class ExtNat {
 public:
  constexpr ExtNat() = default;  // infinity
  constexpr explicit ExtNat(std::uint64_t value) : value_(value), finite_(true) {}

  static constexpr ExtNat infinity() { return ExtNat(); }

  constexpr bool isInfinite() const { return !finite_; }
  constexpr bool isFinite() const { return finite_; }

  std::uint64_t value() const {
    if (!finite_) throw std::domain_error("ExtNat: value of infinity");
    return value_;
  }

  std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

 private:
  std::uint64_t value_ = 0;
  bool finite_ = false;
};

}  // namespace klrsk
