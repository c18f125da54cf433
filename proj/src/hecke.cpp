#include "klrsk/hecke.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace klrsk {

namespace {

using Index = SymmetricGroup::Index;
using Dense = std::vector<LaurentPoly>;

// f (v - v^-1)
void addQuadraticTerm(LaurentPoly& target, const LaurentPoly& f) {
  target.addScaled(f, 1, 1);
  target.addScaled(f, -1, -1);
}

Dense rightGenerator(const SymmetricGroup& G, const Dense& in, int s) {
  Dense out(in.size());
  for (Index w = 0; w < in.size(); ++w) {
    if (in[w].isZero()) continue;
    const Index ws = G.rightMul(w, s);
    out[ws] += in[w];
    if (G.length(ws) < G.length(w)) addQuadraticTerm(out[w], in[w]);
  }
  return out;
}

Dense leftGenerator(const SymmetricGroup& G, int s, const Dense& in) {
  Dense out(in.size());
  for (Index w = 0; w < in.size(); ++w) {
    if (in[w].isZero()) continue;
    const Index sw = G.leftMul(s, w);
    out[sw] += in[w];
    if (G.length(sw) < G.length(w)) addQuadraticTerm(out[w], in[w]);
  }
  return out;
}

int epsilon(int length) { return length % 2 ? -1 : 1; }

}  // namespace

std::string basisName(Basis b) {
  switch (b) {
    case Basis::T: return "T";
    case Basis::C: return "C";
    case Basis::Cprime: return "C'";
  }
  return "?";
}

HeckeElt::HeckeElt(int n, Basis basis)
    : n_(n), basis_(basis), group_(&SymmetricGroup::of(n)), coeffs_(group_->order()) {}

HeckeElt HeckeElt::basisElement(Basis basis, const Permutation& w, const LaurentPoly& c) {
  HeckeElt h(w.size(), basis);
  h.add(w, c);
  return h;
}

std::vector<std::pair<Permutation, LaurentPoly>> HeckeElt::terms() const {
  std::vector<std::pair<Permutation, LaurentPoly>> out;
  for (Index w = 0; w < coeffs_.size(); ++w)
    if (!coeffs_[w].isZero()) out.emplace_back(group_->element(w), coeffs_[w]);
  return out;
}

std::size_t HeckeElt::termCount() const {
  std::size_t k = 0;
  for (const auto& c : coeffs_)
    if (!c.isZero()) ++k;
  return k;
}

bool HeckeElt::isZero() const { return termCount() == 0; }

void HeckeElt::compatible(const HeckeElt& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Hecke elements of different rank");
  if (basis_ != other.basis_) throw std::invalid_argument("mixed-basis Hecke arithmetic");
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

HeckeElt& HeckeElt::operator*=(const LaurentPoly& c) {
  for (auto& x : coeffs_)
    if (!x.isZero()) x = x * c;
  return *this;
}

bool operator==(const HeckeElt& a, const HeckeElt& b) {
  return a.n_ == b.n_ && a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
}

std::string HeckeElt::str() const {
  std::string s;
  for (const auto& [w, c] : terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")" + basisName(basis_) + "[" + w.str() + "]";
  }
  return s.empty() ? "0" : s;
}

HeckeElt multiplyGeneratorRight(const HeckeElt& h, int s) {
  if (h.basis() != Basis::T) throw std::invalid_argument("generator multiplication needs the T-basis");
  HeckeElt out(h.n(), Basis::T);
  Dense in(h.group().order());
  for (Index w = 0; w < in.size(); ++w) in[w] = h.coefficient(w);
  Dense r = rightGenerator(h.group(), in, s);
  for (Index w = 0; w < r.size(); ++w) out.at(w) = std::move(r[w]);
  return out;
}

HeckeElt multiplyGeneratorLeft(int s, const HeckeElt& h) {
  if (h.basis() != Basis::T) throw std::invalid_argument("generator multiplication needs the T-basis");
  HeckeElt out(h.n(), Basis::T);
  Dense in(h.group().order());
  for (Index w = 0; w < in.size(); ++w) in[w] = h.coefficient(w);
  Dense r = leftGenerator(h.group(), s, in);
  for (Index w = 0; w < r.size(); ++w) out.at(w) = std::move(r[w]);
  return out;
}

HeckeElt multiplyT(const HeckeElt& h1, const HeckeElt& h2) {
  if (h1.basis() != Basis::T || h2.basis() != Basis::T) throw std::invalid_argument("multiplyT needs T-basis operands");
  if (h1.n() != h2.n()) throw std::invalid_argument("Hecke elements of different rank");
  const SymmetricGroup& G = h1.group();
  const std::size_t N = G.order();
  Dense acc(N);
  const bool expandRight = h2.termCount() <= h1.termCount();
  const HeckeElt& fixed = expandRight ? h1 : h2;
  const HeckeElt& expanded = expandRight ? h2 : h1;
  Dense base(N);
  for (Index w = 0; w < N; ++w) base[w] = fixed.coefficient(w);
  // fixed * T_y (or T_y * fixed), built along right (left) descents and memoized
  std::unordered_map<Index, Dense> memo;
  memo.emplace(G.identityIndex(), base);
  std::function<const Dense&(Index)> product = [&](Index y) -> const Dense& {
    auto it = memo.find(y);
    if (it != memo.end()) return it->second;
    Dense r;
    if (expandRight) {
      const int s = G.firstRightDescent(y);
      r = rightGenerator(G, product(G.rightMul(y, s)), s);
    } else {
      const int s = G.firstLeftDescent(y);
      r = leftGenerator(G, s, product(G.leftMul(s, y)));
    }
    return memo.emplace(y, std::move(r)).first->second;
  };
  for (Index y : G.byLength()) {
    const LaurentPoly& b = expanded.coefficient(y);
    if (b.isZero()) continue;
    const Dense& part = product(y);
    for (Index w = 0; w < N; ++w)
      if (!part[w].isZero()) acc[w].addProduct(b, part[w]);
  }
  HeckeElt out(h1.n(), Basis::T);
  for (Index w = 0; w < N; ++w) out.at(w) = std::move(acc[w]);
  return out;
}

HeckeElt multiply(const HeckeElt& h1, const HeckeElt& h2) {
  if (h1.basis() != h2.basis()) throw std::invalid_argument("mixed-basis Hecke product");
  if (h1.basis() == Basis::T) return multiplyT(h1, h2);
  return toBasis(multiplyT(toT(h1), toT(h2)), h1.basis());
}

HeckeElt toT(const HeckeElt& h) {
  if (h.basis() == Basis::T) return h;
  const KLTable& kl = klTable(h.n());
  const SymmetricGroup& G = h.group();
  HeckeElt out(h.n(), Basis::T);
  const bool twisted = h.basis() == Basis::C;
  for (Index w = 0; w < G.order(); ++w) {
    const LaurentPoly& a = h.coefficient(w);
    if (a.isZero()) continue;
    for (Index y : kl.interval(w)) {
      LaurentPoly p = kl.p(y, w);
      if (twisted) {
        p = p.bar();
        if (epsilon(G.length(y)) * epsilon(G.length(w)) < 0) p = -p;
      }
      out.at(y).addProduct(a, p);
    }
  }
  return out;
}

namespace {

HeckeElt fromT(const HeckeElt& h, Basis target) {
  const KLTable& kl = klTable(h.n());
  const SymmetricGroup& G = h.group();
  Dense rem(G.order());
  for (Index w = 0; w < G.order(); ++w) rem[w] = h.coefficient(w);
  HeckeElt out(h.n(), target);
  const bool twisted = target == Basis::C;
  const auto& order = G.byLength();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Index w = *it;
    if (rem[w].isZero()) continue;
    const LaurentPoly c = rem[w];
    out.at(w) = c;
    for (Index y : kl.interval(w)) {
      LaurentPoly p = kl.p(y, w);
      if (twisted) {
        p = p.bar();
        if (epsilon(G.length(y)) * epsilon(G.length(w)) < 0) p = -p;
      }
      rem[y] -= c * p;
    }
  }
  return out;
}

}  // namespace

HeckeElt toC(const HeckeElt& h) {
  if (h.basis() == Basis::C) return h;
  return fromT(toT(h), Basis::C);
}

HeckeElt toCprime(const HeckeElt& h) {
  if (h.basis() == Basis::Cprime) return h;
  return fromT(toT(h), Basis::Cprime);
}

HeckeElt toBasis(const HeckeElt& h, Basis b) {
  switch (b) {
    case Basis::T: return toT(h);
    case Basis::C: return toC(h);
    case Basis::Cprime: return toCprime(h);
  }
  throw std::invalid_argument("unknown basis");
}

namespace {

constexpr int kBarTableMaxN = 6;

struct BarTable {
  std::once_flag once;
  std::vector<Dense> images;  // bar(T_x) = T_{x^-1}^{-1}
};

const std::vector<Dense>& barTable(int n) {
  if (n > kBarTableMaxN) throw std::invalid_argument("bar involution on the T-basis is tabulated only for n <= 6");
  static std::mutex m;
  static std::map<int, BarTable> tables;
  BarTable* t;
  {
    std::lock_guard<std::mutex> lock(m);
    t = &tables[n];
  }
  std::call_once(t->once, [&] {
    const SymmetricGroup& G = SymmetricGroup::of(n);
    t->images.assign(G.order(), Dense());
    Dense id(G.order());
    id[G.identityIndex()] = 1;
    t->images[G.identityIndex()] = id;
    for (Index x : G.byLength()) {
      if (x == G.identityIndex()) continue;
      const int s = G.firstLeftDescent(x);
      const Dense& rest = t->images[G.leftMul(s, x)];
      // T_s^{-1} = T_s - (v - v^-1)
      Dense r = leftGenerator(G, s, rest);
      for (Index w = 0; w < r.size(); ++w) {
        if (rest[w].isZero()) continue;
        r[w].addScaled(rest[w], -1, 1);
        r[w].addScaled(rest[w], 1, -1);
      }
      t->images[x] = std::move(r);
    }
  });
  return t->images;
}

}  // namespace

HeckeElt involutionBar(const HeckeElt& h) {
  const HeckeElt t = toT(h);
  const auto& table = barTable(h.n());
  const SymmetricGroup& G = h.group();
  HeckeElt out(h.n(), Basis::T);
  for (Index x = 0; x < G.order(); ++x) {
    const LaurentPoly& a = t.coefficient(x);
    if (a.isZero()) continue;
    const LaurentPoly ab = a.bar();
    for (Index w = 0; w < G.order(); ++w)
      if (!table[x][w].isZero()) out.at(w).addProduct(ab, table[x][w]);
  }
  return toBasis(out, h.basis());
}

HeckeElt involutionJ(const HeckeElt& h) {
  const HeckeElt t = toT(h);
  const SymmetricGroup& G = h.group();
  HeckeElt out(h.n(), Basis::T);
  for (Index x = 0; x < G.order(); ++x) {
    const LaurentPoly& a = t.coefficient(x);
    if (a.isZero()) continue;
    out.at(x) = epsilon(G.length(x)) > 0 ? a.bar() : -a.bar();
  }
  return toBasis(out, h.basis());
}

HeckeElt involutionDagger(const HeckeElt& h) { return involutionBar(involutionJ(h)); }

HeckeElt antiAutoStar(const HeckeElt& h) {
  const HeckeElt t = toT(h);
  const SymmetricGroup& G = h.group();
  HeckeElt out(h.n(), Basis::T);
  for (Index x = 0; x < G.order(); ++x) out.at(G.inverse(x)) = t.coefficient(x);
  return toBasis(out, h.basis());
}

HeckeElt xLambda(const Partition& lambda) {
  HeckeElt h(lambda.size(), Basis::T);
  for (const auto& w : parabolic(lambda).subgroupElements()) h.add(w, LaurentPoly::v(w.length()));
  return h;
}

HeckeElt yLambda(const Partition& lambda) {
  HeckeElt h(lambda.size(), Basis::T);
  for (const auto& w : parabolic(lambda).subgroupElements())
    h.add(w, LaurentPoly::monomial(epsilon(w.length()), -w.length()));
  return h;
}

HeckeElt zLambda(const Partition& lambda) {
  const Permutation wl = parabolic(lambda).wLambda;
  HeckeElt t = HeckeElt::basisElement(Basis::T, wl, LaurentPoly::v(wl.length()));
  return multiplyT(multiplyT(xLambda(lambda), t), yLambda(lambda.transpose()));
}

SpecializedElt specializeAlgebra(const HeckeElt& h, const FieldSpec& field) {
  const HeckeElt t = toT(h);
  SpecializedElt out{h.n(), field, {}};
  out.coeffs.reserve(t.group().order());
  for (Index w = 0; w < t.group().order(); ++w) out.coeffs.push_back(specialize(t.coefficient(w), field));
  return out;
}

bool isSemisimple(const FieldSpec& field, int n) {
  const Scalar& a = field.a();
  const Scalar a2 = a * a;
  if (a2.isOne()) return !(field.characteristic() != 0 && field.characteristic() <= static_cast<std::uint32_t>(n));
  if (field.characteristic() == 0) return true;  // only +-1 are roots of unity in Q
  Scalar power = a;
  for (std::uint32_t r = 1; r < field.characteristic(); ++r) {
    if (power.isOne()) return !(r >= 2 && r <= static_cast<std::uint32_t>(n));
    power *= a;
  }
  return true;
}

}  // namespace klrsk
