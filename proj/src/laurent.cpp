#include "klrsk/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace klrsk {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly f(c);
  if (!f.isZero()) f.low_ = exponent;
  return f;
}

LaurentPoly LaurentPoly::fromTerms(const std::map<int, BigInt>& terms) {
  LaurentPoly f;
  for (const auto& [k, c] : terms) f.addScaled(LaurentPoly(1), c, k);
  return f;
}

bool LaurentPoly::isOne() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

int LaurentPoly::lowDegree() const {
  if (isZero()) throw std::domain_error("lowDegree of zero polynomial");
  return low_;
}

int LaurentPoly::highDegree() const {
  if (isZero()) throw std::domain_error("highDegree of zero polynomial");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  if (isZero() || exponent < low_ || exponent > highDegree()) return 0;
  return coeffs_[exponent - low_];
}

std::map<int, BigInt> LaurentPoly::terms() const {
  std::map<int, BigInt> out;
  forEachTerm([&](int k, const BigInt& c) { out.emplace(k, c); });
  return out;
}

std::size_t LaurentPoly::termCount() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return !c.is_zero(); }));
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1].is_zero()) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly f;
  if (isZero()) return f;
  f.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  f.low_ = -highDegree();
  return f;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly f = *this;
  if (!f.isZero()) f.low_ += k;
  return f;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f = *this;
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

void LaurentPoly::addScaled(const LaurentPoly& f, const BigInt& c, int k) {
  if (f.isZero() || c.is_zero()) return;
  const int flow = f.low_ + k;
  const int fhigh = f.highDegree() + k;
  if (isZero()) {
    low_ = flow;
    coeffs_.assign(f.coeffs_.size(), BigInt(0));
  } else {
    const int high = highDegree();
    if (flow < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - flow), BigInt(0));
      low_ = flow;
    }
    if (fhigh > high) coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(fhigh - high), BigInt(0));
  }
  const std::size_t offset = static_cast<std::size_t>(flow - low_);
  if (c == 1) {
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) coeffs_[offset + i] += f.coeffs_[i];
  } else if (c == -1) {
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) coeffs_[offset + i] -= f.coeffs_[i];
  } else {
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) coeffs_[offset + i] += c * f.coeffs_[i];
  }
  trim();
}

void LaurentPoly::addProduct(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.isZero() || g.isZero()) return;
  if (f.coeffs_.size() == 1) {
    addScaled(g, f.coeffs_[0], f.low_);
    return;
  }
  if (g.coeffs_.size() == 1) {
    addScaled(f, g.coeffs_[0], g.low_);
    return;
  }
  *this += f * g;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  addScaled(other, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  addScaled(other, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.isZero() || b.isZero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string LaurentPoly::str() const {
  if (isZero()) return "0";
  std::string out;
  bool first = true;
  forEachTerm([&](int k, const BigInt& c) {
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += mag.str() + "*v^" + std::to_string(k);
    first = false;
  });
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  if (s == "0") return {};
  LaurentPoly f;
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("malformed polynomial text: " + std::string(text));
    return s.substr(start, pos - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    BigInt c(digits(i));
    int k = 0;
    if (i < s.size() && s[i] == '*') {
      if (s.compare(i, 3, "*v^") != 0) throw std::invalid_argument("malformed polynomial text: " + std::string(text));
      i += 3;
      int ksign = 1;
      if (i < s.size() && s[i] == '-') {
        ksign = -1;
        ++i;
      }
      k = ksign * std::stoi(digits(i));
    }
    f.addScaled(LaurentPoly(1), sign * c, k);
  }
  return f;
}

nlohmann::json LaurentPoly::toJson() const {
  nlohmann::json j = nlohmann::json::object();
  forEachTerm([&](int k, const BigInt& c) { j[std::to_string(k)] = c.str(); });
  return j;
}

LaurentPoly LaurentPoly::fromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  LaurentPoly f;
  for (const auto& [k, c] : j.items()) f.addScaled(LaurentPoly(1), BigInt(c.get<std::string>()), std::stoi(k));
  return f;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.str(); }

LaurentPoly pow(const LaurentPoly& f, unsigned e) {
  LaurentPoly result(1);
  LaurentPoly base = f;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::optional<LaurentPoly> divideExact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.isZero()) throw std::domain_error("division by zero polynomial");
  if (num.isZero()) return LaurentPoly();
  const int shift = num.lowDegree() - den.lowDegree();
  std::vector<BigInt> r;
  for (int k = num.lowDegree(); k <= num.highDegree(); ++k) r.push_back(num.coefficient(k));
  std::vector<BigInt> d;
  for (int k = den.lowDegree(); k <= den.highDegree(); ++k) d.push_back(den.coefficient(k));
  if (r.size() < d.size()) return std::nullopt;
  const std::size_t qlen = r.size() - d.size() + 1;
  std::vector<BigInt> q(qlen);
  for (std::size_t step = qlen; step-- > 0;) {
    BigInt& top = r[step + d.size() - 1];
    if (top.is_zero()) continue;
    if (top % d.back() != 0) return std::nullopt;
    q[step] = top / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) r[step + j] -= q[step] * d[j];
  }
  for (const auto& c : r)
    if (!c.is_zero()) return std::nullopt;
  LaurentPoly out;
  for (std::size_t i = 0; i < q.size(); ++i) out.addScaled(LaurentPoly(1), q[i], shift + static_cast<int>(i));
  return out;
}

LaurentPoly quantumIntV(int m) {
  if (m <= 0) throw std::domain_error("quantum integer needs m >= 1");
  LaurentPoly f;
  for (int k = 1 - m; k <= m - 1; k += 2) f += LaurentPoly::v(k);
  return f;
}

LaurentPoly quantumIntQ(int m) {
  if (m <= 0) throw std::domain_error("quantum integer needs m >= 1");
  LaurentPoly f;
  for (int k = 0; k < m; ++k) f += LaurentPoly::v(2 * k);
  return f;
}

}  // namespace klrsk
