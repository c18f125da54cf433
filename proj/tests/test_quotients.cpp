#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "klrsk/quotients.hpp"
#include "klrsk/specht.hpp"

using namespace klrsk;

namespace {

bool eRegular(const Partition& l, std::uint64_t e) {
  std::map<int, std::uint64_t> rowsOfLength;
  for (int p : l.parts())
    if (++rowsOfLength[p] >= e) return false;
  return true;
}

std::size_t sumSquares(int n, int d) {
  std::size_t s = 0;
  for (const auto& mu : partitionsOf(n))
    if (mu.rows() <= d) s += countStandard(mu) * countStandard(mu);
  return s;
}

Permutation randomPerm(int n, std::mt19937_64& rng) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(w);
}

}  // namespace

TEST_CASE("y_d") {
  const auto y = ydElement(3, 1);
  REQUIRE(y.terms().size() == 2);
  CHECK(y.terms().at(Permutation::identity(3)).isOne());
  CHECK(y.terms().at(Permutation::simple(3, 1)) == Scalar::rational(-1));
  CHECK(ydElement(4, 2).terms().size() == 6);
  CHECK_THROWS_AS(ydElement(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(ydElement(3, 0), std::invalid_argument);
  // y_d^2 = (d+1)! y_d
  const auto y2 = ydElement(4, 2);
  GroupAlgebraElt six(4, 0);
  for (const auto& [w, c] : y2.terms()) six.add(w, c * Scalar::rational(6));
  CHECK(y2 * y2 == six);
}

TEST_CASE("y_d is the specialization of y_lambda for lambda = (d+1, 1, ...)") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d < n; ++d) {
      std::vector<int> parts{d + 1};
      for (int i = d + 1; i < n; ++i) parts.push_back(1);
      const auto spec = specializeAlgebra(yLambda(Partition(parts)), FieldSpec::rationals());
      const auto& G = SymmetricGroup::of(n);
      GroupAlgebraElt fromHecke(n, 0);
      for (SymmetricGroup::Index w = 0; w < G.order(); ++w)
        if (!spec.coeffs[w].isZero()) fromHecke.add(G.element(w), spec.coeffs[w]);
      CHECK(fromHecke == ydElement(n, d));
    }
}

TEST_CASE("quotient basis counts, n <= 8") {
  CHECK(quotientBasisPermutations(4, 2).size() == 14);
  CHECK(quotientBasisPermutations(3, 1).size() == 1);
  for (int n = 1; n <= 8; ++n)
    for (int d = 1; d <= n; ++d) CHECK(quotientBasisPermutations(n, d).size() == sumSquares(n, d));
}

TEST_CASE("quotient basis is a basis of k S_n / J(n,d), n <= 4") {
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)})
    for (int n = 2; n <= 4; ++n)
      for (int d = 1; d < n; ++d) {
        const auto r = verifyQuotientBasis(n, d, f);
        CHECK(r.basisSize == r.expectedBasisSize);
        CHECK(r.idealDimension + r.basisSize == SymmetricGroup::of(n).order());
        CHECK(r.independentModuloIdeal);
        CHECK_MESSAGE(r.ok, n << "," << d << " " << f.str());
      }
  const auto r42 = verifyQuotientBasis(4, 2, FieldSpec::rationals());
  CHECK(r42.basisSize == 14);
  CHECK(r42.idealDimension == 10);
  CHECK_THROWS_AS(verifyQuotientBasis(7, 2, FieldSpec::rationals()), BoundExceeded);
}

TEST_CASE("ideal generators lie in the kernel and J = ker rho, n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d < n; ++d) {
      const TabloidRep rep(lambdaND(n, d));
      for (const auto& g : idealGenerators(n, d, 0)) CHECK(rep.actsAsZero(g));
      CHECK(idealEqualsTabloidKernel(n, d));
    }
}

TEST_CASE("tabloid representation") {
  const TabloidRep rep(Partition({2, 1}));
  CHECK(rep.dimension() == 3);
  const auto img = rep.permutationImage(Permutation::identity(3));
  CHECK(img == std::vector<std::size_t>{0, 1, 2});
  // rho is a homomorphism for the right action
  std::mt19937_64 rng(8);
  const TabloidRep r4(Partition({2, 2}));
  for (int i = 0; i < 20; ++i) {
    const Permutation a = randomPerm(4, rng), b = randomPerm(4, rng);
    const auto ia = r4.permutationImage(a), ib = r4.permutationImage(b), iab = r4.permutationImage(a * b);
    for (std::size_t t = 0; t < r4.dimension(); ++t) CHECK(iab[t] == ib[ia[t]]);
  }
}

TEST_CASE("tabloid kernel basis, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitionsOf(n)) {
      const auto r = tabloidKernelBasisCheck(l, FieldSpec::rationals());
      CHECK(r.kernelDimension == r.expectedKernelDimension);
      CHECK(r.survivorCount + r.kernelDimension == SymmetricGroup::of(n).order());
      CHECK(r.survivorsIndependent);
      CHECK(r.ok);
      CHECK(tabloidKernelIntegralCheck(l));
    }
  CHECK_THROWS_AS(tabloidKernelBasisCheck(Partition({2, 1}), FieldSpec::prime(2)), std::invalid_argument);
  CHECK_THROWS_AS(tabloidKernelIntegralCheck(Partition({3, 2})), BoundExceeded);
}

TEST_CASE("characteristic 2 counterexample") {
  const auto r = charPCounterexample();
  CHECK(r.words.size() == 8);
  CHECK(r.words.front() == Permutation({2, 1, 3, 4}));
  CHECK(r.allShape31);
  CHECK(r.annihilatesOverGF2);
  CHECK(r.nonzeroOverQ);
  CHECK(r.verified);
}

TEST_CASE("classical Specht vectors") {
  for (int n = 2; n <= 6; ++n) CHECK(classicalSpechtCheck(n));
  const TabloidRep rep(Partition({1, 1}));
  const auto e = classicalSpechtVector(rep, Tableau::parse("1/2"));
  REQUIRE(e.size() == 2);
  CHECK(e[0] + e[1] == Scalar());
  CHECK_FALSE(e[0].isZero());
}

TEST_CASE("C-basis endomorphisms over Q") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitionsOf(n)) {
      const auto r = endomorphismBasisCheck(l, FieldSpec::rationals());
      CHECK(r.dimension == countStandard(l) * countStandard(l));
      CHECK(r.rank == r.dimension);
      CHECK(r.ok);
    }
  CHECK(endomorphismBasisCheck(Partition({2, 1}), FieldSpec::rationals()).ok);
  CHECK(endomorphismBasisCheck(Partition({1, 1}), FieldSpec::rationals()).ok);
  CHECK_FALSE(endomorphismBasisCheck(Partition({1, 1}), FieldSpec::prime(2)).ok);
}

TEST_CASE("C-basis endomorphisms in positive characteristic, n <= 5") {
  for (std::uint32_t p : {2U, 3U, 5U})
    for (int n = 1; n <= 5; ++n)
      for (const auto& l : partitionsOf(n)) {
        const FieldSpec f = FieldSpec::prime(p);
        const auto r = endomorphismBasisCheck(l, f);
        const bool irreducible = irreducibilityOracle(l, f) == Irreducibility::Irreducible;
        if (eRegular(l, p) && irreducible) CHECK_MESSAGE(r.ok, l.str() << " p=" << p);
        if (specializedDetNonzero(l, f)) CHECK(r.ok);
        // a spanning set forces the module to be irreducible
        if (r.ok) CHECK(irreducible);
      }
}

TEST_CASE("plain permutations do not give a basis") {
  const auto r = permutationEndomorphismCheck(Partition({2, 2}), FieldSpec::rationals());
  CHECK(r.dimension == 4);
  CHECK(r.rank == 2);
  CHECK(r.identityActing == 2);
  CHECK_FALSE(r.ok);
}

TEST_CASE("mixed modules") {
  const auto all3 = mixedModuleBasisCheck(partitionsOf(3), FieldSpec::rationals());
  CHECK(all3.dimension == 6);
  CHECK(all3.ok);
  const auto two = mixedModuleBasisCheck({Partition({3}), Partition({2, 1})}, FieldSpec::rationals());
  CHECK(two.dimension == 5);
  CHECK(two.ok);
  const auto all4 = mixedModuleBasisCheck(partitionsOf(4), FieldSpec::rationals());
  CHECK(all4.dimension == 24);
  CHECK(all4.ok);
  CHECK_FALSE(mixedModuleBasisCheck(partitionsOf(4), FieldSpec::prime(2)).ok);
}

TEST_CASE("monomial invariants multiply by block concatenation") {
  CHECK(monomialInvariantProduct(Permutation({2, 1}), Permutation({1})) == Permutation({2, 1, 3}));
  CHECK(monomialInvariantProduct(Permutation({1}), Permutation({2, 1})) == Permutation({1, 3, 2}));
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> size(1, 5);
  for (int i = 0; i < 200; ++i) {
    const Permutation a = randomPerm(size(rng), rng), b = randomPerm(size(rng), rng), c = randomPerm(size(rng), rng);
    const Permutation ab = monomialInvariantProduct(a, b);
    CHECK(longestDecreasingSubsequence(ab) ==
          std::max(longestDecreasingSubsequence(a), longestDecreasingSubsequence(b)));
    CHECK(monomialInvariantProduct(ab, c) == monomialInvariantProduct(a, monomialInvariantProduct(b, c)));
  }
}

TEST_CASE("trace monomials with short decreasing subsequences span") {
  const auto a = traceMonomialSpanCheck(2, 1, 1, 50);
  CHECK(a.ok);
  const auto b = traceMonomialSpanCheck(3, 2, 2, 50);
  CHECK(b.ok);
  CHECK(b.restrictedRank == b.fullRank);
  CHECK(b.fullRank < b.trials);
  CHECK(traceMonomialSpanCheck(2, 2, 2, 50).ok);
  // same seed, same answer
  const auto again = traceMonomialSpanCheck(3, 2, 2, 50);
  CHECK(again.fullRank == b.fullRank);
  CHECK_THROWS_AS(traceMonomialSpanCheck(7, 2, 2, 10), BoundExceeded);
}
