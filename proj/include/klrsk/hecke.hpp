#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klrsk/combinatorics.hpp"
#include "klrsk/field.hpp"
#include "klrsk/laurent.hpp"
#include "klrsk/symgroup.hpp"

namespace klrsk {

enum class Basis { T, C, Cprime };

std::string basisName(Basis b);

// Element of the Hecke algebra of S_n over Z[v, v^-1], expanded in one basis.
class HeckeElt {
 public:
  using Index = SymmetricGroup::Index;

  HeckeElt(int n, Basis basis);
  static HeckeElt basisElement(Basis basis, const Permutation& w, const LaurentPoly& c = 1);
  static HeckeElt one(int n) { return basisElement(Basis::T, Permutation::identity(n)); }

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  const SymmetricGroup& group() const { return *group_; }

  const LaurentPoly& coefficient(Index w) const { return coeffs_[w]; }
  const LaurentPoly& coefficient(const Permutation& w) const { return coeffs_[group_->index(w)]; }
  LaurentPoly& at(Index w) { return coeffs_[w]; }
  void add(const Permutation& w, const LaurentPoly& c) { coeffs_[group_->index(w)] += c; }

  std::vector<std::pair<Permutation, LaurentPoly>> terms() const;
  std::size_t termCount() const;
  bool isZero() const;

  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  HeckeElt& operator*=(const LaurentPoly& c);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, HeckeElt h) { return h *= c; }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b);

  std::string str() const;

 private:
  int n_;
  Basis basis_;
  const SymmetricGroup* group_;
  std::vector<LaurentPoly> coeffs_;

  void compatible(const HeckeElt& other) const;
};

HeckeElt multiplyT(const HeckeElt& h1, const HeckeElt& h2);
// same-basis product; C and C' products go through the T-basis
HeckeElt multiply(const HeckeElt& h1, const HeckeElt& h2);
HeckeElt multiplyGeneratorRight(const HeckeElt& h, int s);  // h T_s, T-basis
HeckeElt multiplyGeneratorLeft(int s, const HeckeElt& h);   // T_s h, T-basis

// Kazhdan-Lusztig polynomials of S_n.  Internally the classical P_{y,w}(q);
// p_{y,w} = v^{l(y)-l(w)} P_{y,w}(v^2).
class KLTable {
 public:
  using Index = SymmetricGroup::Index;

  static KLTable build(int n);

  int n() const { return n_; }
  const std::vector<std::int64_t>& P(Index y, Index w) const;  // empty unless y <= w
  LaurentPoly p(Index y, Index w) const;
  LaurentPoly p(const Permutation& y, const Permutation& w) const;
  std::int64_t mu(Index y, Index w) const;
  const std::vector<Index>& interval(Index w) const { return below_[w]; }
  const std::vector<std::pair<Index, std::int64_t>>& muList(Index w) const { return mu_[w]; }
  std::size_t pairCount() const;
  std::size_t distinctPolynomials() const { return polys_.size(); }

  // records "y-word;w-word;poly-text" for y < w
  void save(std::ostream& os) const;
  static KLTable load(std::istream& is, int n);

  friend bool operator==(const KLTable& a, const KLTable& b);

 private:
  int n_ = 0;
  std::vector<std::vector<Index>> below_;
  std::vector<std::vector<std::uint32_t>> polyId_;
  std::vector<std::vector<std::int64_t>> polys_;
  std::vector<std::vector<std::pair<Index, std::int64_t>>> mu_;

  std::uint32_t intern(const std::vector<std::int64_t>& poly, std::map<std::vector<std::int64_t>, std::uint32_t>& pool);
  void finishMu(Index w);
};

std::filesystem::path klCacheDirectory();
// memoized per n; read from and written to the cache directory when caching is enabled
const KLTable& klTable(int n);

HeckeElt toT(const HeckeElt& h);
HeckeElt toC(const HeckeElt& h);
HeckeElt toCprime(const HeckeElt& h);
HeckeElt toBasis(const HeckeElt& h, Basis b);

HeckeElt involutionBar(const HeckeElt& h);
HeckeElt involutionJ(const HeckeElt& h);
HeckeElt involutionDagger(const HeckeElt& h);
HeckeElt antiAutoStar(const HeckeElt& h);

HeckeElt xLambda(const Partition& lambda);
HeckeElt yLambda(const Partition& lambda);
HeckeElt zLambda(const Partition& lambda);

// Image in H_k = H tensor k (v -> a), expanded in the T-basis.
struct SpecializedElt {
  int n;
  FieldSpec field;
  std::vector<Scalar> coeffs;  // indexed like SymmetricGroup::of(n)
};

SpecializedElt specializeAlgebra(const HeckeElt& h, const FieldSpec& field);
bool isSemisimple(const FieldSpec& field, int n);

}  // namespace klrsk
