#include "klrsk/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "klrsk/cells.hpp"
#include "klrsk/combinatorics.hpp"
#include "klrsk/hecke.hpp"
#include "klrsk/quotients.hpp"
#include "klrsk/rsk.hpp"
#include "klrsk/specht.hpp"
#include "klrsk/symgroup.hpp"

namespace klrsk::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kKLMaxN = 7;
constexpr int kOperationalMaxN = 5;
constexpr int kListMaxN = 8;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "json";
  unsigned threads = 1;
  bool quiet = false;
  std::string cacheDir;

  std::string perm;
  int n = 0;
  int d = 0;
  int m = 0;
  std::string y, w;
  std::vector<std::string> shapes;
  int allOf = 0;
  std::uint32_t characteristic = 0;
  std::string a = "1";
  bool det = false, hook = false, check = false, verify = false, operational = false;
  bool oracle = false, integral = false, permutations = false, list = false;
  std::size_t i = 0, l = 0;
  std::size_t trials = 50;
  std::uint64_t seed = 20240601;
  std::uint64_t spinBound = 1000000;
};

Json tableauJson(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return rows;
}

Json matrixJson(const PolyMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x.str());
    rows.push_back(row);
  }
  return rows;
}

FieldSpec fieldOf(const Options& o) {
  if (o.characteristic == 0) {
    BigRational a;
    try {
      a = BigRational(o.a);
    } catch (const std::exception&) {
      throw UsageError("--a must be a rational number, got " + o.a);
    }
    if (a == 0) throw UsageError("--a must be nonzero");
    return FieldSpec::rationals(a);
  }
  if (!isPrime(o.characteristic)) throw UsageError("--char must be 0 or a prime");
  std::int64_t a = 0;
  try {
    std::size_t used = 0;
    a = std::stoll(o.a, &used);
    if (used != o.a.size()) throw std::invalid_argument(o.a);
  } catch (const std::exception&) {
    throw UsageError("--a must be an integer over GF(p), got " + o.a);
  }
  if (((a % o.characteristic) + o.characteristic) % o.characteristic == 0) throw UsageError("--a must be nonzero in GF(p)");
  return FieldSpec::prime(o.characteristic, a);
}

std::vector<Partition> shapesOf(const Options& o) {
  std::vector<Partition> out;
  for (const auto& s : o.shapes) {
    try {
      out.push_back(Partition::parse(s));
    } catch (const std::exception& e) {
      throw UsageError("bad shape '" + s + "': " + e.what());
    }
  }
  if (o.allOf > 0)
    for (auto& p : partitionsOf(o.allOf)) out.push_back(std::move(p));
  if (out.empty()) throw UsageError("give --shape or --all-of");
  return out;
}

void guard(int n, int limit, const std::string& what) {
  if (n > limit) throw BoundExceeded(what + " is limited to n <= " + std::to_string(limit));
}

// Runs f on every index with the given number of workers; results keep the input order.
std::vector<Json> parallelMap(std::size_t count, unsigned threads, const std::function<Json(std::size_t)>& f,
                              const std::function<void(std::size_t)>& done) {
  std::vector<Json> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::mutex progress;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < count;) {
      try {
        results[k] = f(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
      std::lock_guard<std::mutex> lock(progress);
      done(k);
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

struct Result {
  Json report;
  bool pass = true;
};

// Per-shape commands share the fan-out and the "pass" bookkeeping.
Result perShape(const Options& o, const std::string& command, std::ostream& err,
                const std::function<Json(const Partition&)>& one) {
  const auto shapes = shapesOf(o);
  std::size_t finished = 0;
  auto results = parallelMap(
      shapes.size(), o.threads, [&](std::size_t k) { return one(shapes[k]); },
      [&](std::size_t k) {
        ++finished;
        if (!o.quiet && shapes.size() > 1)
          err << "[" << finished << "/" << shapes.size() << "] " << command << " " << shapes[k].str() << "\n";
      });
  Result r;
  for (const auto& j : results)
    if (j.contains("pass") && !j["pass"].get<bool>()) r.pass = false;
  if (results.size() == 1) {
    r.report = results.front();
  } else {
    r.report = Json{{"command", command}, {"results", results}, {"pass", r.pass}};
  }
  return r;
}

Permutation parsePermutation(const std::string& text, int n) {
  try {
    return Permutation::parse(text, n);
  } catch (const std::exception& e) {
    throw UsageError("bad permutation '" + text + "': " + e.what());
  }
}

Result cmdRsk(const Options& o) {
  const Permutation w = parsePermutation(o.perm, o.n);
  const RskPair pq = rsk(w);
  Json j{{"command", "rsk"}, {"perm", w.str()}, {"P", tableauJson(pq.P)}, {"Q", tableauJson(pq.Q)},
         {"shape", pq.P.shape().str()}};
  const bool roundTrip = rskInverse(pq) == w;
  j["roundTrip"] = roundTrip;
  j["pass"] = roundTrip;
  return {j, roundTrip};
}

Result cmdKlpoly(const Options& o) {
  if (o.n < 1) throw UsageError("klpoly needs --n");
  guard(o.n, kKLMaxN, "klpoly");
  const KLTable& kl = klTable(o.n);
  Json j{{"command", "klpoly"}, {"n", o.n}};
  if (o.y.empty() != o.w.empty()) throw UsageError("give both --y and --w, or neither");
  if (!o.y.empty()) {
    const Permutation y = parsePermutation(o.y, o.n), w = parsePermutation(o.w, o.n);
    if (y.size() != o.n || w.size() != o.n) throw UsageError("--y and --w must be permutations of 1..n");
    const auto& G = SymmetricGroup::of(o.n);
    const auto yi = G.index(y), wi = G.index(w);
    j["y"] = y.str();
    j["w"] = w.str();
    j["bruhatLeq"] = G.bruhatLeq(yi, wi);
    j["p"] = kl.p(yi, wi).str();
    const auto& P = kl.P(yi, wi);
    LaurentPoly q;
    for (std::size_t k = 0; k < P.size(); ++k) q.addScaled(LaurentPoly(1), P[k], static_cast<int>(k));
    j["P_q"] = q.str();
    j["mu"] = kl.mu(yi, wi);
  } else {
    j["pairs"] = kl.pairCount();
    j["distinctPolynomials"] = kl.distinctPolynomials();
  }
  return {j, true};
}

Json cellsJson(const std::vector<std::vector<Permutation>>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) {
    Json words = Json::array();
    for (const auto& w : c) words.push_back(w.str());
    out.push_back(words);
  }
  return out;
}

Result cmdCells(const Options& o) {
  if (o.n < 1) throw UsageError("cells needs --n");
  guard(o.n, kListMaxN, "cells");
  const auto comb = cellDecompositionCombinatorial(o.n);
  const auto& table = rskTable(o.n);
  const auto& G = SymmetricGroup::of(o.n);
  auto shapeOf = [&](const Permutation& w) { return table.shape[G.index(w)]; };
  Json groups = Json::array();
  for (std::size_t k = 0; k < comb.twoSidedCells.size(); ++k) {
    const Partition& lambda = comb.twoSidedShapes[k];
    std::vector<std::vector<Permutation>> left, right;
    for (const auto& c : comb.leftCells)
      if (shapeOf(c.front()) == lambda) left.push_back(c);
    for (const auto& c : comb.rightCells)
      if (shapeOf(c.front()) == lambda) right.push_back(c);
    groups.push_back(Json{{"shape", lambda.str()},
                          {"twoSided", cellsJson({comb.twoSidedCells[k]}).front()},
                          {"leftCells", cellsJson(left)},
                          {"rightCells", cellsJson(right)}});
  }
  Json j{{"command", "cells"}, {"n", o.n}, {"shapes", groups}};
  bool pass = true;
  if (o.operational) {
    guard(o.n, kOperationalMaxN, "operational cells");
    const auto op = cellDecompositionOperational(o.n);
    auto sorted = [](std::vector<std::vector<Permutation>> c) {
      std::sort(c.begin(), c.end());
      return c;
    };
    const bool left = sorted(op.leftCells) == sorted(comb.leftCells);
    const bool right = sorted(op.rightCells) == sorted(comb.rightCells);
    const bool two = sorted(op.twoSidedCells) == sorted(comb.twoSidedCells);
    pass = left && right && two;
    j["operational"] = Json{{"leftAgree", left}, {"rightAgree", right}, {"twoSidedAgree", two}};
  }
  j["pass"] = pass;
  return {j, pass};
}

Result cmdGmatrix(const Options& o, std::ostream& err) {
  return perShape(o, "gmatrix", err, [&](const Partition& lambda) {
    guard(lambda.size(), kKLMaxN, "gmatrix");
    const GMatrix g = (o.i || o.l) ? gMatrixAt(lambda, o.i ? o.i : 1, o.l ? o.l : 1) : gMatrix(lambda);
    Json j{{"command", "gmatrix"}, {"shape", lambda.str()}, {"dimension", g.entries.size()}, {"G", matrixJson(g.entries)}};
    bool pass = true;
    std::optional<LaurentPoly> det, hook;
    if (o.det || o.check) det = determinant(g.entries);
    if (o.hook || o.check) hook = hookFormulaDet(lambda);
    if (o.det) j["det"] = det->str();
    if (o.hook) j["hook"] = hook->str();
    if (o.check) {
      const bool same = *det == *hook;
      const bool block = isBlockScalar(bigMatrix(lambda), gMatrix(lambda).entries);
      j["check"] = Json{{"detEqualsHook", same}, {"blockScalar", block}};
      pass = same && block;
    }
    j["pass"] = pass;
    return j;
  });
}

Result cmdGram(const Options& o, std::ostream& err) {
  return perShape(o, "gram", err, [&](const Partition& lambda) {
    guard(lambda.size(), kKLMaxN, "gram");
    const PolyMatrix gram = gramMatrix(lambda);
    Json j{{"command", "gram"}, {"shape", lambda.str()}, {"dimension", gram.size()}, {"gram", matrixJson(gram)}};
    bool pass = true;
    if (o.det) j["det"] = determinant(gram).str();
    if (o.check) {
      pass = gramRelationCheck(lambda);
      j["check"] = Json{{"relationToG", pass}};
    }
    j["pass"] = pass;
    return j;
  });
}

Result cmdCarter(const Options& o, std::ostream& err) {
  const FieldSpec field = fieldOf(o);
  return perShape(o, "carter", err, [&](const Partition& lambda) {
    guard(lambda.size(), kKLMaxN, "carter");
    const CarterReport c = carterCertificate(lambda, field);
    Json factors = Json::array();
    for (const auto& f : c.factors)
      factors.push_back(Json{{"rows", {f.factor.a, f.factor.b}},
                             {"column", f.factor.c},
                             {"hooks", {f.factor.hookAC, f.factor.hookBC}},
                             {"exponent", f.factor.exponent},
                             {"value", f.value ? Json(f.value->str()) : Json(nullptr)}});
    Json j{{"command", "carter"},
           {"shape", lambda.str()},
           {"field", field.str()},
           {"carter", c.carter},
           {"reportedShape", c.reportedShape.str()},
           {"detNonzero", c.detNonzero},
           {"reportedDetNonzero", c.reportedDetNonzero},
           {"factors", factors},
           {"factorsNonzero", c.factorsNonzero},
           {"implicationHolds", c.implicationHolds}};
    bool pass = c.implicationHolds;
    if (o.oracle) {
      const Irreducibility r = irreducibilityOracle(lambda, field, o.spinBound);
      j["oracle"] = irreducibilityName(r);
      if (c.carter && r == Irreducibility::Reducible) pass = false;
      if (c.detNonzero && r == Irreducibility::Reducible) pass = false;
    }
    j["pass"] = pass;
    return j;
  });
}

Json wordsJson(const std::vector<Permutation>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

Result cmdBasis(const Options& o) {
  if (o.n < 1 || o.d < 1) throw UsageError("basis needs --n and --d");
  guard(o.n, kListMaxN, "basis");
  const auto basis = quotientBasisPermutations(o.n, o.d);
  Json j{{"command", "basis"}, {"n", o.n}, {"d", o.d}, {"count", basis.size()}};
  if (o.list) j["permutations"] = wordsJson(basis);
  bool pass = true;
  if (o.verify) {
    const FieldSpec field = fieldOf(o);
    const auto r = verifyQuotientBasis(o.n, o.d, field);
    j["verify"] = Json{{"field", field.str()},
                       {"expectedCount", r.expectedBasisSize},
                       {"idealDimension", r.idealDimension},
                       {"independentModuloIdeal", r.independentModuloIdeal},
                       {"ok", r.ok}};
    pass = r.ok;
  }
  j["pass"] = pass;
  return {j, pass};
}

Result cmdTabloidKernel(const Options& o, std::ostream& err) {
  if (o.characteristic != 0) {
    // only the explicit GF(2) example is asserted in positive characteristic
    const auto shapes = shapesOf(o);
    if (o.characteristic != 2 || shapes.size() != 1 || shapes.front() != Partition({2, 2}))
      throw UsageError("positive characteristic is only supported as --shape 2,2 --char 2 (the known counterexample)");
    const auto c = charPCounterexample();
    Json j{{"command", "tabloid-kernel"}, {"shape", "2,2"}, {"field", "GF(2)"}, {"words", wordsJson(c.words)},
           {"allShape31", c.allShape31}, {"annihilatesOverGF2", c.annihilatesOverGF2},
           {"nonzeroOverQ", c.nonzeroOverQ}, {"pass", c.verified}};
    return {j, c.verified};
  }
  return perShape(o, "tabloid-kernel", err, [&](const Partition& lambda) {
    const auto r = tabloidKernelBasisCheck(lambda, FieldSpec::rationals());
    Json j{{"command", "tabloid-kernel"},
           {"shape", lambda.str()},
           {"kernelDimension", r.kernelDimension},
           {"expectedKernelDimension", r.expectedKernelDimension},
           {"survivors", r.survivorCount},
           {"survivorsIndependent", r.survivorsIndependent}};
    bool pass = r.ok;
    if (o.integral) {
      const bool z = tabloidKernelIntegralCheck(lambda);
      j["integral"] = z;
      pass = pass && z;
    }
    j["pass"] = pass;
    return j;
  });
}

Json endoJson(const EndomorphismReport& r) {
  return Json{{"dimension", r.dimension}, {"rank", r.rank}, {"ok", r.ok}};
}

Result cmdEndoBasis(const Options& o, std::ostream& err) {
  const FieldSpec field = fieldOf(o);
  if (o.shapes.size() > 1 && o.allOf == 0) {
    const auto shapes = shapesOf(o);
    const auto r = mixedModuleBasisCheck(shapes, field);
    Json names = Json::array();
    for (const auto& s : shapes) names.push_back(s.str());
    Json j{{"command", "endo-basis"}, {"shapes", names}, {"field", field.str()}, {"mixed", endoJson(r)}, {"pass", r.ok}};
    return {j, r.ok};
  }
  return perShape(o, "endo-basis", err, [&](const Partition& lambda) {
    const auto r = endomorphismBasisCheck(lambda, field);
    Json j{{"command", "endo-basis"}, {"shape", lambda.str()}, {"field", field.str()}, {"kl", endoJson(r)}};
    if (o.permutations) {
      const auto p = permutationEndomorphismCheck(lambda, field);
      Json pj = endoJson(p);
      pj["identityActing"] = p.identityActing;
      j["permutations"] = pj;
    }
    j["pass"] = r.ok;
    return j;
  });
}

Result cmdInvariants(const Options& o) {
  if (o.n < 1 || o.m < 1 || o.d < 1) throw UsageError("invariants needs --n, --m and --d");
  const auto r = traceMonomialSpanCheck(o.n, o.m, o.d, o.trials, o.seed);
  Json j{{"command", "invariants"}, {"n", o.n}, {"m", o.m}, {"d", o.d}, {"seed", o.seed},
         {"trials", r.trials}, {"restrictedRank", r.restrictedRank}, {"fullRank", r.fullRank}, {"pass", r.ok}};
  return {j, r.ok};
}

Result cmdSelftest(const Options& o, std::ostream& err) {
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"rsk example",
       [] {
         const auto pq = rsk(Permutation({5, 1, 6, 2, 4, 3}));
         return pq.P == Tableau::parse("1,3,5/2,4/6") && pq.Q == Tableau::parse("1,2,3/4,6/5");
       }},
      {"d(3,3,2) = 42",
       [] { return countStandard(Partition({3, 3, 2})) == 42 && enumerateStandard(Partition({3, 3, 2})).size() == 42; }},
      {"hook formula n <= 4",
       [] {
         for (int n = 1; n <= 4; ++n)
           for (const auto& l : partitionsOf(n))
             if (hookFormulaDet(l) != determinant(gMatrix(l).entries)) return false;
         return true;
       }},
      {"gram relation n <= 4",
       [] {
         for (int n = 1; n <= 4; ++n)
           for (const auto& l : partitionsOf(n))
             if (!gramRelationCheck(l)) return false;
         return true;
       }},
      {"quotient basis (4,2)", [] { return verifyQuotientBasis(4, 2, FieldSpec::rationals()).ok; }},
      {"GF(2) tabloid counterexample", [] { return charPCounterexample().verified; }},
      {"plain permutations fail at (2,2)",
       [] {
         const auto r = permutationEndomorphismCheck(Partition({2, 2}), FieldSpec::rationals());
         return !r.ok && r.identityActing == 2 && endomorphismBasisCheck(Partition({2, 2}), FieldSpec::rationals()).ok;
       }},
      {"trace span (2,2,2)", [] { return traceMonomialSpanCheck(2, 2, 2, 20).ok; }},
  };
  std::size_t finished = 0;
  auto results = parallelMap(
      checks.size(), o.threads,
      [&](std::size_t k) { return Json{{"name", checks[k].first}, {"pass", checks[k].second()}}; },
      [&](std::size_t k) {
        ++finished;
        if (!o.quiet) err << "[" << finished << "/" << checks.size() << "] " << checks[k].first << "\n";
      });
  bool pass = true;
  for (const auto& j : results) pass = pass && j["pass"].get<bool>();
  return {Json{{"command", "selftest"}, {"checks", results}, {"pass", pass}}, pass};
}

void renderText(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) renderText(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) renderText(j[k], prefix + "[" + std::to_string(k) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kazhdan-Lusztig bases, RSK and Specht module computations"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", o.threads, "worker threads for per-shape commands")->check(CLI::Range(1U, 256U));
  app.add_flag("--quiet", o.quiet, "no progress on stderr");
  app.add_option("--cache-dir", o.cacheDir, "enable the KL table cache in this directory");

  auto shapeOpts = [&](CLI::App* c) {
    c->add_option("--shape", o.shapes, "partition like 3,2,1 (repeatable)");
    c->add_option("--all-of", o.allOf, "every partition of this n");
  };
  auto fieldOpts = [&](CLI::App* c) {
    c->add_option("--char", o.characteristic, "0 or a prime");
    c->add_option("--a", o.a, "value of v (rational, or integer mod p)");
  };

  auto* rskCmd = app.add_subcommand("rsk", "RSK pair of a permutation");
  rskCmd->add_option("--perm", o.perm, "one-line word or cycles")->required();
  rskCmd->add_option("--n", o.n, "degree, needed for cycle notation");

  auto* kl = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomials");
  kl->add_option("--n", o.n)->required();
  kl->add_option("--y", o.y);
  kl->add_option("--w", o.w);

  auto* cellsCmd = app.add_subcommand("cells", "left, right and two-sided cells");
  cellsCmd->add_option("--n", o.n)->required();
  cellsCmd->add_flag("--operational", o.operational, "also compute cells from C-basis products and compare");

  auto* gm = app.add_subcommand("gmatrix", "the matrix G(lambda)");
  shapeOpts(gm);
  gm->add_flag("--det", o.det);
  gm->add_flag("--hook", o.hook);
  gm->add_flag("--check", o.check, "det G against the hook formula and the block-scalar big matrix");
  gm->add_option("--i", o.i, "read off C(P_i,P_j) C(P_k,P_l) at this i (1-based)");
  gm->add_option("--l", o.l, "and this l");

  auto* gr = app.add_subcommand("gram", "Gram matrix of the standard basis of S^lambda");
  shapeOpts(gr);
  gr->add_flag("--det", o.det);
  gr->add_flag("--check", o.check, "relation between det G and the Gram determinant");

  auto* ca = app.add_subcommand("carter", "power diagram certificate");
  shapeOpts(ca);
  fieldOpts(ca);
  ca->add_flag("--oracle", o.oracle, "also decide irreducibility directly");
  ca->add_option("--spin-bound", o.spinBound, "largest q^d the oracle enumerates");

  auto* ba = app.add_subcommand("basis", "permutations with no long decreasing subsequence");
  ba->add_option("--n", o.n)->required();
  ba->add_option("--d", o.d)->required();
  ba->add_flag("--verify", o.verify, "build J(n,d) and check the basis");
  ba->add_flag("--list", o.list, "print the permutations");
  fieldOpts(ba);

  auto* tk = app.add_subcommand("tabloid-kernel", "kernel of the tabloid representation");
  shapeOpts(tk);
  tk->add_option("--char", o.characteristic, "0, or 2 for the known counterexample");
  tk->add_flag("--integral", o.integral, "also check the statement over Z (n <= 4)");

  auto* eb = app.add_subcommand("endo-basis", "C_w of shape lambda as endomorphisms of R(lambda)");
  shapeOpts(eb);
  fieldOpts(eb);
  eb->add_flag("--permutations", o.permutations, "also try the plain permutations");

  auto* inv = app.add_subcommand("invariants", "restricted trace monomials");
  inv->add_option("--n", o.n)->required();
  inv->add_option("--m", o.m)->required();
  inv->add_option("--d", o.d)->required();
  inv->add_option("--trials", o.trials);
  inv->add_option("--seed", o.seed);

  auto* st = app.add_subcommand("selftest", "quick battery of exact checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (!o.cacheDir.empty()) ::setenv("KLRSK_CACHE_DIR", o.cacheDir.c_str(), 1);

  try {
    Result r;
    if (rskCmd->parsed()) r = cmdRsk(o);
    else if (kl->parsed()) r = cmdKlpoly(o);
    else if (cellsCmd->parsed()) r = cmdCells(o);
    else if (gm->parsed()) r = cmdGmatrix(o, err);
    else if (gr->parsed()) r = cmdGram(o, err);
    else if (ca->parsed()) r = cmdCarter(o, err);
    else if (ba->parsed()) r = cmdBasis(o);
    else if (tk->parsed()) r = cmdTabloidKernel(o, err);
    else if (eb->parsed()) r = cmdEndoBasis(o, err);
    else if (inv->parsed()) r = cmdInvariants(o);
    else if (st->parsed()) r = cmdSelftest(o, err);
    if (o.format == "json") out << r.report.dump() << "\n";
    else renderText(r.report, "", out);
    return r.pass ? kOk : kCheckFailed;
  } catch (const BoundExceeded& e) {
    err << "bound: " << e.what() << "\n";
    return kBound;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace klrsk::cli
