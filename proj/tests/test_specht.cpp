#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "doctest.h"
#include "klrsk/specht.hpp"

using namespace klrsk;

namespace {

using Index = SymmetricGroup::Index;

LaurentPoly vv(int k) { return LaurentPoly::v(k); }

LaurentPoly randomPoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 2), expo(-2, 2), coef(-3, 3);
  std::map<int, BigInt> m;
  for (int k = terms(rng); k > 0; --k) m[expo(rng)] += coef(rng);
  return LaurentPoly::fromTerms(m);
}

HeckeElt randomElt(int n, std::mt19937_64& rng) {
  const auto& G = SymmetricGroup::of(n);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(G.order() - 1));
  HeckeElt h(n, Basis::T);
  for (int i = 0; i < 3; ++i) h.at(pick(rng)) += randomPoly(rng);
  return h;
}

PermutationModuleElt randomM(const Partition& l, std::mt19937_64& rng) {
  PermutationModuleElt m(l);
  for (auto& c : m.coords()) c = randomPoly(rng);
  return m;
}

// Classical Specht module of S_n over GF(p): polytabloids of standard tableaux in the
// tabloid module, spun under the simple transpositions.
struct ClassicalSpecht {
  std::vector<Tabloid> tabloids;
  std::map<Tabloid, std::size_t> index;
  std::vector<std::vector<std::size_t>> gen;  // gen[s-1][i]: tabloid i moved by s
  std::vector<std::vector<Scalar>> basis;     // standard polytabloids
  std::uint32_t p;

  ClassicalSpecht(const Partition& l, std::uint32_t prime) : p(prime) {
    tabloids = enumerateTabloids(l);
    for (std::size_t i = 0; i < tabloids.size(); ++i) index[tabloids[i]] = i;
    const int n = l.size();
    for (int s = 1; s < n; ++s) {
      gen.emplace_back();
      for (const auto& t : tabloids) gen.back().push_back(index.at(act(t, Permutation::simple(n, s))));
    }
    for (const auto& T : enumerateStandard(l)) basis.push_back(polytabloid(T));
  }

  std::vector<Scalar> polytabloid(const Tableau& T) const {
    std::vector<std::vector<int>> cols;
    for (int c = 0; c < T.shape()[0]; ++c) {
      cols.emplace_back();
      for (int r = 0; r < T.shape().rows() && T.shape()[r] > c; ++r) cols.back().push_back(T.at(r, c));
    }
    std::vector<Scalar> v(tabloids.size(), Scalar::zero(p));
    std::map<int, int> f;
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int sign) {
      if (c == cols.size()) {
        const Tabloid t = Tabloid::of(T.mapEntries([&](int x) { return f.count(x) ? f.at(x) : x; }));
        v[index.at(t)] += Scalar::fromInteger(sign, p);
        return;
      }
      std::vector<int> img = cols[c];
      std::sort(img.begin(), img.end());
      do {
        int inv = 0;
        for (std::size_t i = 0; i < img.size(); ++i) {
          f[cols[c][i]] = img[i];
          for (std::size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++inv;
        }
        rec(c + 1, inv % 2 ? -sign : sign);
      } while (std::next_permutation(img.begin(), img.end()));
    };
    rec(0, 1);
    return v;
  }

  std::size_t spin(const std::vector<Scalar>& x) const {
    RowSpace span(tabloids.size(), p);
    std::vector<std::vector<Scalar>> queue{x};
    span.insert(x);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& g : gen) {
        std::vector<Scalar> y(tabloids.size(), Scalar::zero(p));
        for (std::size_t i = 0; i < y.size(); ++i) y[g[i]] = queue[q][i];
        if (span.insert(y)) queue.push_back(std::move(y));
      }
    return span.rank();
  }

  bool irreducible() const {
    const std::size_t d = basis.size();
    std::vector<std::uint32_t> c(d, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < d && c[i] == p - 1) c[i++] = 0;
      if (i == d) return true;
      ++c[i];
      // one representative per line: first nonzero coordinate 1
      std::size_t first = 0;
      while (c[first] == 0) ++first;
      if (c[first] != 1) continue;
      std::vector<Scalar> x(tabloids.size(), Scalar::zero(p));
      for (std::size_t k = 0; k < d; ++k)
        if (c[k])
          for (std::size_t t = 0; t < x.size(); ++t) x[t] += Scalar::fromInteger(c[k], p) * basis[k][t];
      if (spin(x) < d) return false;
    }
  }
};

}  // namespace

TEST_CASE("small G matrices and determinants") {
  for (int n = 1; n <= 5; ++n) {
    const auto g = gMatrix(Partition({n}));
    CHECK(g.entries == PolyMatrix{{LaurentPoly(1)}});
  }
  const LaurentPoly d11 = determinant(gMatrix(Partition({1, 1})).entries);
  CHECK(d11 == -(vv(-1) + vv(1)));
  CHECK(hookFormulaDet(Partition({1, 1})) == d11);
  CHECK(determinant(gMatrix(Partition({2, 1})).entries) == vv(-2) + 1 + vv(2));
  CHECK(determinant(gMatrix(Partition({2, 2})).entries) == LaurentPoly::parse("1*v^-4 + 3*v^-2 + 4*v^0 + 3*v^2 + 1*v^4"));
}

TEST_CASE("z_lambda and the form on M^lambda") {
  const auto z = zLambdaInM(Partition({1, 1}));
  CHECK(bilinearForm(z, z) == 1 + vv(-2));
  CHECK(gramMatrix(Partition({1, 1})) == PolyMatrix{{1 + vv(-2)}});
  CHECK(gramDet(Partition({2, 1})) == vv(2) + vv(4) + vv(6));
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitionsOf(n)) {
      const auto b = spechtBasis(l);
      CHECK(b.vectors.size() == countStandard(l));
      CHECK(b.prefixList.size() == countStandard(l));
      CHECK(b.vectors.front() == zLambdaInM(l));
      CHECK_FALSE(gramDet(l).isZero());
    }
}

TEST_CASE("two ways of acting on M^lambda agree, n <= 4") {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 4; ++n)
    for (const auto& l : partitionsOf(n))
      for (int rep = 0; rep < 6; ++rep) {
        const auto m = randomM(l, rng);
        const HeckeElt h = randomElt(n, rng);
        CHECK(actOnM(m, h) == actOnMViaAlgebra(m, h));
      }
}

TEST_CASE("the form is symmetric and * is its adjoint") {
  std::mt19937_64 rng(22);
  for (int n = 2; n <= 4; ++n)
    for (const auto& l : partitionsOf(n))
      for (int rep = 0; rep < 6; ++rep) {
        const auto a = randomM(l, rng), b = randomM(l, rng);
        const HeckeElt h = randomElt(n, rng);
        CHECK(bilinearForm(a, b) == bilinearForm(b, a));
        CHECK(bilinearForm(actOnM(a, h), b) == bilinearForm(a, actOnM(b, antiAutoStar(h))));
      }
}

TEST_CASE("det G is bar-invariant with unit extreme coefficients, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitionsOf(n)) {
      const LaurentPoly d = determinant(gMatrix(l).entries);
      CHECK(d.bar() == d);
      CHECK(abs(d.coefficient(d.lowDegree())) == 1);
      CHECK(abs(d.coefficient(d.highDegree())) == 1);
    }
}

TEST_CASE("hook formula equals det G, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitionsOf(n)) CHECK_MESSAGE(hookFormulaDet(l) == determinant(gMatrix(l).entries), l.str());
}

TEST_CASE("big matrix is block scalar, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitionsOf(n)) {
      const auto g = gMatrix(l);
      const auto big = bigMatrix(l);
      const auto d = countStandard(l);
      CHECK(big.size() == d * d);
      CHECK(isBlockScalar(big, g.entries));
    }
  // a perturbed block is rejected
  const auto l = Partition({2, 1});
  auto wrong = gMatrix(l).entries;
  wrong[0][0] += 1;
  CHECK_FALSE(isBlockScalar(bigMatrix(l), wrong));
}

TEST_CASE("G does not depend on the outer indices, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitionsOf(n)) {
      const auto g = gMatrix(l).entries;
      const auto d = countStandard(l);
      for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t k = 1; k <= d; ++k) CHECK(gMatrixAt(l, i, k).entries == g);
    }
}

TEST_CASE("Gram relation and cell-module Gram determinants") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitionsOf(n)) CHECK_MESSAGE(gramRelationCheck(l), l.str());
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitionsOf(n)) {
      const LaurentPoly fromG = cellGramDetFromG(l, determinant(gMatrix(l).entries));
      CHECK(determinant(cellGramCBasis(l)) == fromG);
      CHECK(determinant(cellGramTBasis(l)) == fromG);
    }
}

TEST_CASE("specialized determinants") {
  CHECK_FALSE(specializedDetNonzero(Partition({1, 1}), FieldSpec::prime(2)));
  CHECK(specializedDetNonzero(Partition({1, 1}), FieldSpec::prime(3)));
  CHECK(specializedDetNonzero(Partition({2, 1}), FieldSpec::prime(2)));
  CHECK_FALSE(specializedDetNonzero(Partition({2, 1}), FieldSpec::prime(3)));
  CHECK_FALSE(specializedDetNonzero(Partition({3, 1}), FieldSpec::prime(2)));
  CHECK(specializedDetNonzero(Partition({3, 2}), FieldSpec::prime(5)));
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitionsOf(n)) CHECK(specializedDetNonzero(l, FieldSpec::rationals()));
}

TEST_CASE("Carter certificates") {
  const auto c22 = carterCertificate(Partition({2, 2}), FieldSpec::prime(2));
  CHECK_FALSE(c22.carter);
  const auto c21 = carterCertificate(Partition({2, 1}), FieldSpec::prime(2));
  CHECK(c21.carter);
  CHECK(c21.detNonzero);
  CHECK(c21.reportedShape == Partition({2, 1}));
  // rows constant only: the certificate moves to the transpose
  const auto c11 = carterCertificate(Partition({1, 1}), FieldSpec::prime(2));
  CHECK(c11.carter);
  CHECK_FALSE(c11.detNonzero);
  CHECK(c11.reportedShape == Partition({2}));
  CHECK(c11.reportedDetNonzero);
  CHECK(c11.implicationHolds);
  for (std::uint32_t p : {2U, 3U, 5U})
    for (int n = 1; n <= 5; ++n)
      for (const auto& l : partitionsOf(n)) {
        const auto r = carterCertificate(l, FieldSpec::prime(p));
        CHECK_MESSAGE(r.implicationHolds, l.str() << " p=" << p);
        CHECK(r.factors.size() == hookFactors(r.reportedShape).size());
      }
}

TEST_CASE("Specht action matrices satisfy the specialized relations") {
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5, 2)})
    for (int n = 2; n <= 4; ++n)
      for (const auto& l : partitionsOf(n)) {
        const auto mats = spechtActionMatrices(l, f);
        REQUIRE(mats.size() == static_cast<std::size_t>(n - 1));
        const std::size_t d = countStandard(l);
        const Scalar c = f.a() - f.a().inverse();
        for (std::size_t s = 0; s < mats.size(); ++s) {
          const auto& A = mats[s];
          REQUIRE(A.size() == d);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
              Scalar sq = f.zero();
              for (std::size_t k = 0; k < d; ++k) sq += A[i][k] * A[k][j];
              CHECK(sq == c * A[i][j] + (i == j ? f.one() : f.zero()));
            }
        }
      }
}

TEST_CASE("oracle agrees with classical Specht modules at a = 1") {
  for (std::uint32_t p : {2U, 3U, 5U})
    for (int n = 1; n <= 5; ++n)
      for (const auto& l : partitionsOf(n)) {
        const ClassicalSpecht cs(l, p);
        RowSpace rs(cs.tabloids.size(), p);
        for (const auto& b : cs.basis) rs.insert(b);
        CHECK(rs.rank() == countStandard(l));
        const bool expected = cs.irreducible();
        const Irreducibility got = irreducibilityOracle(l, FieldSpec::prime(p));
        REQUIRE(got != Irreducibility::Infeasible);
        CHECK_MESSAGE((got == Irreducibility::Irreducible) == expected, l.str() << " p=" << p);
      }
}

TEST_CASE("known decomposition facts") {
  CHECK(irreducibilityOracle(Partition({2, 2}), FieldSpec::prime(2)) == Irreducibility::Irreducible);
  CHECK(irreducibilityOracle(Partition({2, 1}), FieldSpec::prime(3)) == Irreducibility::Reducible);
  CHECK(irreducibilityOracle(Partition({2, 1}), FieldSpec::prime(2)) == Irreducibility::Irreducible);
  CHECK(irreducibilityOracle(Partition({3, 1}), FieldSpec::prime(2)) == Irreducibility::Reducible);
  CHECK(irreducibilityOracle(Partition({3, 2}), FieldSpec::prime(5)) == Irreducibility::Irreducible);
  CHECK(irreducibilityOracle(Partition({3, 1, 1}), FieldSpec::prime(3)) == Irreducibility::Irreducible);
  CHECK(irreducibilityOracle(Partition({4, 1}), FieldSpec::rationals()) == Irreducibility::Irreducible);
  CHECK(irreducibilityOracle(Partition({3, 2}), FieldSpec::prime(2), 4) == Irreducibility::Infeasible);
  CHECK(irreducibilityName(Irreducibility::Reducible) == "reducible");
}

TEST_CASE("nonzero specialized det implies irreducible; transpose symmetry, n <= 5") {
  for (std::uint32_t p : {2U, 3U, 5U})
    for (int n = 1; n <= 5; ++n)
      for (const auto& l : partitionsOf(n)) {
        const FieldSpec f = FieldSpec::prime(p);
        const Irreducibility r = irreducibilityOracle(l, f);
        if (specializedDetNonzero(l, f)) CHECK(r == Irreducibility::Irreducible);
        CHECK(r == irreducibilityOracle(l.transpose(), f));
      }
}
