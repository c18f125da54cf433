// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "klrsk/cells.hpp"
#include "klrsk/quotients.hpp"
#include "klrsk/rsk.hpp"
#include "klrsk/specht.hpp"

using namespace klrsk;

namespace {

using Index = SymmetricGroup::Index;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: " << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s %2d %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.note.str().empty() ? "" : " -- ", o.note.str().c_str());
  std::fflush(stdout);
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace

int main() {
  criterion(1, "RSK example and round trip over S_n, n <= 7", [](Outcome& o) {
    const Permutation w({5, 1, 6, 2, 4, 3});
    const RskPair pq = rsk(w);
    o.require(pq.P == Tableau::parse("1,3,5/2,4/6") && pq.Q == Tableau::parse("1,2,3/4,6/5"), "example pair");
    for (int n = 1; n <= 7; ++n) {
      const auto& G = SymmetricGroup::of(n);
      std::set<std::pair<Tableau, Tableau>> seen;
      for (Index i = 0; i < G.order(); ++i) {
        const RskPair r = rsk(G.element(i));
        o.require(r.P.shape() == r.Q.shape() && r.P.isStandard() && r.Q.isStandard(), "standard pair");
        o.require(rskInverse(r) == G.element(i), "round trip " + G.element(i).str());
        seen.emplace(r.P, r.Q);
      }
      o.require(seen.size() == G.order(), "injective at n=" + std::to_string(n));
    }
  });

  criterion(2, "d(3,3,2) = 42 both ways; sum of d^2 = n!, n <= 8", [](Outcome& o) {
    const Partition l({3, 3, 2});
    o.require(countStandard(l) == 42, "hook formula");
    o.require(enumerateStandard(l).size() == 42, "enumeration");
    for (int n = 1; n <= 8; ++n) {
      std::uint64_t s = 0;
      for (const auto& mu : partitionsOf(n)) {
        const auto e = enumerateStandard(mu).size();
        o.require(e == countStandard(mu), "count " + mu.str());
        s += e * e;
      }
      o.require(s == factorial(n), "sum at n=" + std::to_string(n));
    }
  });

  criterion(3, "C'_w defining property n <= 5; x_lambda, y_lambda via C'_{w0}, C_{w0}, n <= 6", [](Outcome& o) {
    for (int n = 1; n <= 5; ++n) {
      const auto& G = SymmetricGroup::of(n);
      for (Index w = 0; w < G.order(); ++w) {
        const HeckeElt t = toT(HeckeElt::basisElement(Basis::Cprime, G.element(w)));
        o.require(involutionBar(t) == t, "bar-invariance " + G.element(w).str());
        bool tri = t.coefficient(w) == LaurentPoly(1);
        for (const auto& [y, c] : t.terms())
          if (y != G.element(w) && c.highDegree() >= 0) tri = false;
        o.require(tri, "unitriangularity " + G.element(w).str());
      }
    }
    for (int n = 1; n <= 6; ++n)
      for (const auto& l : partitionsOf(n)) {
        const Permutation w0 = parabolic(l).w0;
        const int len = w0.length();
        o.require(xLambda(l) == toT(HeckeElt::basisElement(Basis::Cprime, w0, LaurentPoly::v(len))), "x " + l.str());
        o.require(yLambda(l) == toT(HeckeElt::basisElement(Basis::C, w0, LaurentPoly::monomial(w0.sign(), -len))),
                  "y " + l.str());
      }
  });

  criterion(4, "operational cells and <=_LR, n <= 4; killing rule, n <= 5", [](Outcome& o) {
    auto asSet = [](const std::vector<std::vector<Permutation>>& cells) {
      std::set<std::set<Permutation>> s;
      for (const auto& c : cells) s.emplace(c.begin(), c.end());
      return s;
    };
    for (int n = 1; n <= 4; ++n) {
      const auto comb = cellDecompositionCombinatorial(n);
      const auto op = cellDecompositionOperational(n);
      o.require(asSet(op.leftCells) == asSet(comb.leftCells), "left cells n=" + std::to_string(n));
      o.require(asSet(op.rightCells) == asSet(comb.rightCells), "right cells n=" + std::to_string(n));
      o.require(asSet(op.twoSidedCells) == asSet(comb.twoSidedCells), "two-sided cells n=" + std::to_string(n));
      const auto pre = operationalPreorderTwoSided(n);
      const auto& G = SymmetricGroup::of(n);
      for (Index y = 0; y < G.order(); ++y)
        for (Index w = 0; w < G.order(); ++w)
          o.require(pre.leq(y, w) == dominates(rskShape(G.element(w)), rskShape(G.element(y))), "LR order");
    }
    for (int n = 1; n <= 5; ++n) {
      const auto& G = SymmetricGroup::of(n);
      const auto& table = rskTable(n);
      for (const auto& l : partitionsOf(n)) {
        const auto m = CellModule::build(l);
        for (Index y = 0; y < G.order(); ++y) {
          if (dominates(table.shape[y], l)) continue;
          // through the T-expansion of C_y, not the product rule
          const PolyMatrix a = m.actionOf(toT(HeckeElt::basisElement(Basis::C, G.element(y))));
          o.require(isZero(a), "C_" + G.element(y).str() + " on R(" + l.str() + ")");
        }
      }
    }
  });

  criterion(5, "hook formula = det G and block-scalar B, n <= 6; S_7 (2,2,2,1), (3,2,2)", [](Outcome& o) {
    std::vector<Partition> shapes;
    for (int n = 1; n <= 6; ++n)
      for (const auto& l : partitionsOf(n)) shapes.push_back(l);
    shapes.push_back(Partition({2, 2, 2, 1}));
    shapes.push_back(Partition({3, 2, 2}));
    for (const auto& l : shapes) {
      const auto g = gMatrix(l);
      o.require(hookFormulaDet(l) == determinant(g.entries), "det " + l.str());
      o.require(isBlockScalar(bigMatrix(l), g.entries), "block scalar " + l.str());
    }
  });

  criterion(6, "Gram relation, n <= 5; (1,1) gives -(v + v^-1)", [](Outcome& o) {
    for (int n = 1; n <= 5; ++n)
      for (const auto& l : partitionsOf(n)) o.require(gramRelationCheck(l), "relation " + l.str());
    const LaurentPoly d = determinant(gMatrix(Partition({1, 1})).entries);
    o.require(d == -(LaurentPoly::v(-1) + LaurentPoly::v(1)), "(1,1) value");
    o.require(d == -LaurentPoly::v(1) * (1 + LaurentPoly::v(-2)), "(1,1) factorization");
    o.require(gramDet(Partition({1, 1})) == 1 + LaurentPoly::v(-2), "(1,1) Gram determinant");
  });

  criterion(7, "quotient basis over Q, n <= 5, count 14 at (4,2); J = ker rho, n <= 5", [](Outcome& o) {
    for (int n = 2; n <= 5; ++n)
      for (int d = 1; d < n; ++d) {
        const auto r = verifyQuotientBasis(n, d, FieldSpec::rationals());
        o.require(r.ok, "basis (" + std::to_string(n) + "," + std::to_string(d) + ")");
        o.require(idealEqualsTabloidKernel(n, d), "kernel (" + std::to_string(n) + "," + std::to_string(d) + ")");
      }
    o.require(verifyQuotientBasis(4, 2, FieldSpec::rationals()).basisSize == 14, "count at (4,2)");
  });

  criterion(8, "tabloid kernel basis over Q, n <= 5; GF(2) counterexample", [](Outcome& o) {
    for (int n = 1; n <= 5; ++n)
      for (const auto& l : partitionsOf(n))
        o.require(tabloidKernelBasisCheck(l, FieldSpec::rationals()).ok, "kernel " + l.str());
    const auto c = charPCounterexample();
    o.require(c.words.size() == 8, "eight words");
    o.require(c.allShape31, "shape (3,1)");
    o.require(c.verified, "annihilator");
  });

  criterion(9, "C_w span End over Q, n <= 5; permutations fail at (2,2); mixed subsets, n = 3, 4", [](Outcome& o) {
    for (int n = 1; n <= 5; ++n)
      for (const auto& l : partitionsOf(n))
        o.require(endomorphismBasisCheck(l, FieldSpec::rationals()).ok, "endo " + l.str());
    const auto p = permutationEndomorphismCheck(Partition({2, 2}), FieldSpec::rationals());
    o.require(!p.ok && p.identityActing == 2, "plain permutations at (2,2)");
    for (int n = 3; n <= 4; ++n) {
      const auto shapes = partitionsOf(n);
      for (unsigned mask = 1; mask < (1U << shapes.size()); ++mask) {
        std::vector<Partition> subset;
        for (std::size_t i = 0; i < shapes.size(); ++i)
          if (mask & (1U << i)) subset.push_back(shapes[i]);
        o.require(mixedModuleBasisCheck(subset, FieldSpec::rationals()).ok, "mixed subset");
      }
    }
  });

  criterion(10, "Carter => det G != 0 => irreducible, n <= 5, p in {2,3,5}, a = 1; transpose symmetry", [](Outcome& o) {
    int literal = 0, instances = 0;
    for (std::uint32_t p : {2U, 3U, 5U}) {
      const FieldSpec f = FieldSpec::prime(p, 1);
      for (int n = 1; n <= 5; ++n)
        for (const auto& l : partitionsOf(n)) {
          ++instances;
          const auto c = carterCertificate(l, f);
          const Irreducibility r = irreducibilityOracle(l, f);
          const std::string tag = l.str() + " p=" + std::to_string(p);
          o.require(r != Irreducibility::Infeasible, "oracle bound " + tag);
          // Carter certifies det G of the reported shape (lambda or lambda')
          o.require(!c.carter || c.reportedDetNonzero, "carter chain " + tag);
          if (c.reportedDetNonzero) o.require(r == Irreducibility::Irreducible, "irreducible via reported " + tag);
          if (c.detNonzero) o.require(r == Irreducibility::Irreducible, "det => irreducible " + tag);
          o.require(r == irreducibilityOracle(l.transpose(), f), "transpose " + tag);
          if (c.carter && !c.detNonzero) ++literal;
        }
    }
    if (!o.pass) o.note << "; ";
    o.note << instances << " instances; literal carter => det G(lambda) != 0 fails on " << literal
           << " (rows-only cases, certified through lambda')";
  });

  criterion(11, "block products keep the LDS max rule; trace span at (2,2,2), (3,2,2)", [](Outcome& o) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> size(1, 6);
    for (int i = 0; i < 500; ++i) {
      auto randomPerm = [&](int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        std::shuffle(w.begin(), w.end(), rng);
        return Permutation(w);
      };
      const Permutation a = randomPerm(size(rng)), b = randomPerm(size(rng));
      o.require(longestDecreasingSubsequence(monomialInvariantProduct(a, b)) ==
                    std::max(longestDecreasingSubsequence(a), longestDecreasingSubsequence(b)),
                "max rule");
    }
    o.require(traceMonomialSpanCheck(2, 2, 2, 50).ok, "(2,2,2)");
    o.require(traceMonomialSpanCheck(3, 2, 2, 50).ok, "(3,2,2)");
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
