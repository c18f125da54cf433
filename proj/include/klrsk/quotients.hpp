#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "klrsk/combinatorics.hpp"
#include "klrsk/field.hpp"
#include "klrsk/linalg.hpp"
#include "klrsk/symgroup.hpp"

namespace klrsk {

// Raised when an exhaustive computation would exceed its configured size limit.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of the group algebra k S_n; zero coefficients are never stored.
class GroupAlgebraElt {
 public:
  GroupAlgebraElt(int n, std::uint32_t characteristic) : n_(n), p_(characteristic) {}

  int n() const { return n_; }
  std::uint32_t characteristic() const { return p_; }
  const std::map<Permutation, Scalar>& terms() const { return terms_; }
  void add(const Permutation& w, const Scalar& c);
  bool isZero() const { return terms_.empty(); }

  friend GroupAlgebraElt operator*(const GroupAlgebraElt& a, const GroupAlgebraElt& b);
  friend bool operator==(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.terms_ == b.terms_;
  }
  std::string str() const;

 private:
  int n_;
  std::uint32_t p_;
  std::map<Permutation, Scalar> terms_;
};

// sum of sign(t) t over the copy of S_{d+1} fixing d+2, ..., n
GroupAlgebraElt ydElement(int n, int d, std::uint32_t characteristic = 0);

// permutations with no decreasing subsequence longer than d, sorted
std::vector<Permutation> quotientBasisPermutations(int n, int d);

constexpr int kIdealMaxN = 6;

struct QuotientBasisReport {
  std::size_t basisSize = 0;
  std::size_t expectedBasisSize = 0;  // sum of d(mu)^2 over mu with at most d rows
  std::size_t idealDimension = 0;
  bool independentModuloIdeal = false;
  bool ok = false;
};
// Builds J(n,d) from the products u y_d w and checks the permutation basis of k S_n / J(n,d).
QuotientBasisReport verifyQuotientBasis(int n, int d, const FieldSpec& field);
// Spanning vectors of J(n,d) over k, one per pair of cosets (u S_{d+1}, S_{d+1} w).
std::vector<GroupAlgebraElt> idealGenerators(int n, int d, std::uint32_t characteristic);

// k S_n acting on the right on k Tab_lambda through permutation matrices.
class TabloidRep {
 public:
  explicit TabloidRep(const Partition& lambda);

  const Partition& lambda() const { return lambda_; }
  const std::vector<Tabloid>& tabloids() const { return tabloids_; }
  std::size_t dimension() const { return tabloids_.size(); }
  // image[i] = index of tabloid i acted on by w
  std::vector<std::size_t> permutationImage(const Permutation& w) const;
  // rho(x) flattened row-major, sparse
  std::vector<std::pair<std::size_t, Scalar>> image(const GroupAlgebraElt& x) const;
  bool actsAsZero(const GroupAlgebraElt& x) const { return image(x).empty(); }

 private:
  Partition lambda_;
  std::vector<Tabloid> tabloids_;
  std::map<Tabloid, std::size_t> index_;
};

struct TabloidKernelReport {
  std::size_t kernelDimension = 0;
  std::size_t expectedKernelDimension = 0;  // sum of d(mu)^2 over mu not dominating lambda
  std::size_t survivorCount = 0;            // permutations whose shape dominates lambda
  bool survivorsIndependent = false;
  bool ok = false;
};
// characteristic 0 only (exact rationals)
TabloidKernelReport tabloidKernelBasisCheck(const Partition& lambda, const FieldSpec& field);
// Same statement over Z: every rho(u) is an integer combination of the survivors' images.
bool tabloidKernelIntegralCheck(const Partition& lambda);
// J(n,d) equals ker rho_{lambda(n,d)} over Q
bool idealEqualsTabloidKernel(int n, int d);

struct CounterexampleReport {
  std::vector<Permutation> words;
  bool allShape31 = false;
  bool annihilatesOverGF2 = false;
  bool nonzeroOverQ = false;
  bool verified = false;
};
CounterexampleReport charPCounterexample();

// Classical Specht vectors e_T = sum over the column stabiliser of sign(s) {T s}, in Q Tab_lambda.
std::vector<Scalar> classicalSpechtVector(const TabloidRep& rep, const Tableau& t);
// standard e_T independent, their number is d(lambda), and y_d kills Q Tab_{lambda(n,d)}
bool classicalSpechtCheck(int n);

struct EndomorphismReport {
  std::size_t dimension = 0;  // d(lambda)^2, or the sum over the shapes
  std::size_t rank = 0;
  std::size_t identityActing = 0;  // elements acting as the identity (plain-permutation variant)
  bool ok = false;
};
// C_w, shape(w) = lambda, acting on R(lambda)_k span End(R(lambda)_k)
EndomorphismReport endomorphismBasisCheck(const Partition& lambda, const FieldSpec& field);
// Same with the permutations w (that is T_w) in place of C_w.
EndomorphismReport permutationEndomorphismCheck(const Partition& lambda, const FieldSpec& field);
// images of C_x, shape(x) in shapes, in End of the direct sum of the R(lambda)_k
EndomorphismReport mixedModuleBasisCheck(const std::vector<Partition>& shapes, const FieldSpec& field);

// block concatenation: pi on 1..m, sigma shifted onto m+1..m+n
Permutation monomialInvariantProduct(const Permutation& pi, const Permutation& sigma);

struct TraceSpanReport {
  std::size_t trials = 0;
  std::size_t restrictedRank = 0;
  std::size_t fullRank = 0;
  bool ok = false;
};
// f(sigma, nu) evaluated on random integer d x d matrix tuples; ranks with and without the
// restriction LDS(sigma) <= d must agree.
TraceSpanReport traceMonomialSpanCheck(int n, int m, int d, std::size_t trials, std::uint64_t seed = 20240601);

}  // namespace klrsk
