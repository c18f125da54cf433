#include <algorithm>
#include <numeric>
#include <map>
#include <set>

#include "doctest.h"
#include "klrsk/combinatorics.hpp"
#include "klrsk/rsk.hpp"
#include "klrsk/symgroup.hpp"

using namespace klrsk;

namespace {

std::vector<Permutation> all(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_CASE("worked example") {
  const Permutation w({5, 1, 6, 2, 4, 3});
  const RskPair pq = rsk(w);
  CHECK(pq.P == Tableau::parse("1,3,5/2,4/6"));
  CHECK(pq.Q == Tableau::parse("1,2,3/4,6/5"));
  CHECK(rskShape(w) == Partition({3, 2, 1}));
  CHECK(rskInverse(pq) == w);
  CHECK(rskInverse(Tableau::parse("1,3,5/2,4/6"), Tableau::parse("1,2,3/4,6/5")) == w);
}

TEST_CASE("identity and reversal") {
  for (int n = 1; n <= 6; ++n) {
    const RskPair id = rsk(Permutation::identity(n));
    CHECK(id.P == Tableau::rowSuperstandard(Partition({n})));
    CHECK(id.Q == id.P);
    const RskPair rev = rsk(Permutation::longest(n));
    CHECK(rev.P.shape().rows() == n);
    CHECK(rev.P == rev.Q);
  }
}

TEST_CASE("bijection onto same-shape pairs, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::pair<Tableau, Tableau>> seen;
    for (const auto& w : all(n)) {
      const RskPair pq = rsk(w);
      CHECK(pq.P.isStandard());
      CHECK(pq.Q.isStandard());
      CHECK(pq.P.shape() == pq.Q.shape());
      CHECK(rskInverse(pq) == w);
      seen.emplace(pq.P, pq.Q);
    }
    CHECK(seen.size() == all(n).size());
  }
  // and rsk o rskInverse = id on all pairs, n <= 5
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitionsOf(n))
      for (const auto& P : enumerateStandard(l))
        for (const auto& Q : enumerateStandard(l)) CHECK(rsk(rskInverse(P, Q)) == RskPair{P, Q});
}

TEST_CASE("inverting swaps the symbols, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all(n)) {
      const RskPair a = rsk(w), b = rsk(w.inverse());
      CHECK(b.P == a.Q);
      CHECK(b.Q == a.P);
    }
}

TEST_CASE("rows of the shape count the longest decreasing subsequence, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all(n)) CHECK(rskShape(w).rows() == longestDecreasingSubsequence(w));
}

TEST_CASE("shape dominates lambda(n,d) iff no decreasing subsequence is longer than d") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= n; ++d) {
      const Partition l = lambdaND(n, d);
      for (const auto& w : all(n)) CHECK(dominates(rskShape(w), l) == (longestDecreasingSubsequence(w) <= d));
    }
}

TEST_CASE("longest element of a parabolic subgroup") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitionsOf(n)) {
      const Permutation w0 = parabolic(l).w0;
      const Tableau t = Tableau::columnSuperstandard(l.transpose());
      CHECK(rskInverse(t, t) == w0);
      CHECK(rskShape(w0) == l.transpose());
    }
  CHECK(rskShape(Permutation({2, 1, 4, 3})) == Partition({2, 2}));
}

TEST_CASE("bad inputs to the inverse") {
  CHECK_THROWS(rskInverse(Tableau::parse("1,2/3"), Tableau::parse("1,2,3")));
  CHECK_THROWS(rskInverse(Tableau::parse("2,1/3"), Tableau::parse("1,2/3")));
}
