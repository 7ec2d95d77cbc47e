#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracle.hpp"
#include "ringkit/cli.hpp"
#include "ringkit/corpus.hpp"
#include "ringkit/groebner.hpp"
#include "ringkit/parser.hpp"
#include "ringkit/printer.hpp"
#include "ringkit/ringstruct.hpp"

using namespace ringkit;
using nlohmann::json;

namespace {

const std::string kCorpusDir = std::string(RINGKIT_SOURCE_DIR) + "/corpus";

RingPtr poly_ring(std::vector<std::string> vars, unsigned long p = 0) {
  return RingPresentation::make(std::move(vars), FieldDesc{p}, {});
}

RingPtr quotient(std::vector<std::string> vars,
                 std::vector<std::string> gens, unsigned long p = 0,
                 bool local = false) {
  auto R = poly_ring(vars, p);
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, R));
  return RingPresentation::make(R->vars(), FieldDesc{p}, std::move(ps), local);
}

IdealHandle id_of(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, R));
  return IdealHandle(R, std::move(ps));
}

Program load_corpus_item(const std::string& file) {
  std::ifstream in(kCorpusDir + "/" + file);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_declarations(ss.str());
}

// Collects failures and prints the single verdict line for one criterion.
struct Criterion {
  int num;
  std::string name;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void finish() {
    std::printf("criterion %2d/10  %-52s %s\n", num, name.c_str(),
                failures.empty() ? "PASS" : "FAIL");
    std::fflush(stdout);
    for (const auto& f : failures) MESSAGE(f);
    CHECK(failures.empty());
  }
};

std::string scrub(std::string s) {
  s = std::regex_replace(s, std::regex("\"timing_ms\": \\d+"),
                         "\"timing_ms\": 0");
  s = std::regex_replace(s, std::regex("\"generated_at\": \"[^\"]*\""),
                         "\"generated_at\": \"\"");
  return s;
}

// Lift a reduced element of a quotient ring into a plain polynomial ring
// over the same variables, for re-verification against a fresh basis.
Polynomial lift(const Polynomial& f, const RingPtr& from, const RingPtr& to) {
  return parse_poly(poly_str(f, *from), to);
}

}  // namespace

TEST_CASE("criterion 1: random membership vs bounded oracle") {
  Criterion c{1, "random membership vs the bounded linear oracle", {}};
  std::mt19937_64 rng(0x5eed0001);
  const std::vector<std::string> pool{"x", "y", "z"};
  auto t0 = std::chrono::steady_clock::now();
  int trials = 0;
  int members = 0;
  while (trials < 200) {
    unsigned nvars = 1 + rng() % 3;
    auto R = poly_ring({pool.begin(), pool.begin() + nvars}, 5);
    unsigned ngens = 1 + rng() % 3;
    std::vector<Polynomial> gens;
    for (unsigned i = 0; i < ngens; ++i)
      gens.push_back(oracle::random_poly(rng, R, 3, 1 + rng() % 4));
    Polynomial f = oracle::random_poly(rng, R, 3, 1 + rng() % 4);

    GroebnerBasis gb = buchberger(gens, R->order(), default_exec_mode(), true);
    bool engine = ideal_member(f, gb);
    unsigned bound = f.total_degree();
    for (const auto& g : gens) bound += g.total_degree();
    if (engine) {
      ++members;
      auto cofs = cofactors_over_inputs(f, gb);
      Polynomial acc = parse_poly("0", R);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        acc = add(acc, mul(cofs[i], gens[i], R->order()), R->order());
        if (!cofs[i].is_zero())
          bound = std::max(bound,
                           cofs[i].total_degree() + gens[i].total_degree());
      }
      c.expect(acc == f, "cofactor combination does not rebuild the element");
    }
    bool ora = oracle::member_bounded(f, gens, *R, bound);
    c.expect(engine == ora,
             "disagreement at trial " + std::to_string(trials));
    ++trials;
  }
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  c.expect(trials >= 200, "fewer than 200 trials");
  c.expect(members >= 10, "too few positive instances to be meaningful");
  c.expect(secs < 60, "took " + std::to_string(secs) + "s, budget is 60s");
  c.finish();
}

TEST_CASE("criterion 2: ex-4.8 associated primes and localized torsion") {
  Criterion c{2, "ex-4.8 associated primes and localized torsion", {}};
  Program prog = load_corpus_item("ex-4.8.ring");
  const RingPtr& A = *prog.find_ring("A");

  auto ass = monomial_associated_primes(zero_ideal(A));
  std::vector<MonPrime> want{MonPrime{{0}}, MonPrime{{0, 1}}};
  c.expect(ass == want, "Ass(A) is not {(x), (x, y)}");

  TqDimReport tq = total_quotient_dim(A);
  c.expect(tq.known == Verdict::True && tq.dim == 1,
           "dim Q(A) was not decided to be 1");

  const auto& M = prog.find_module("M")->mod;
  for (const char* p : {"P1", "Pm"}) {
    LocalizedTorsionReport lr =
        torsion_free_localized(M, prog.find_ideal(p)->handle);
    c.expect(!lr.ill_posed && lr.verdict == Verdict::True,
             std::string("torsion-freeness not preserved at ") + p);
  }
  c.finish();
}

TEST_CASE("criterion 3: ex-4.7-n5 minimal primes") {
  Criterion c{3, "ex-4.7-n5 minimal primes as an exact set", {}};
  Program prog = load_corpus_item("ex-4.7-n5.ring");
  const RingPtr& A = *prog.find_ring("A");
  auto mins = monomial_minimal_primes(zero_ideal(A));
  std::vector<MonPrime> want{MonPrime{{2, 3, 4}},
                             MonPrime{{0, 1, 2, 3}},
                             MonPrime{{0, 1, 2, 4}},
                             MonPrime{{0, 1, 3, 4}}};
  c.expect(mins == want, "minimal primes differ from the expected four");
  c.finish();
}

TEST_CASE("criterion 4: ex-4.6 audit flags") {
  Criterion c{4, "ex-4.6 audit: every flagged claim re-verified", {}};
  Program prog = load_corpus_item("ex-4.6.ring");
  const RingPtr& A = *prog.find_ring("A");

  // P + I is not prime; the witness must be nilpotent in the quotient.
  PrimeVerdict pv = is_prime(prog.find_ideal("P")->handle);
  c.expect(pv.verdict == Verdict::False, "P was not rejected as prime");
  c.expect(pv.witness_a.has_value() && pv.witness_b.has_value(),
           "no product witness attached");
  if (pv.witness_a && pv.witness_b) {
    auto base = poly_ring({"x", "y", "z"});
    std::vector<Polynomial> j;
    for (const char* s : {"x", "y", "x*y", "y*z", "z^2"})
      j.push_back(parse_poly(s, base));
    GroebnerBasis fresh = buchberger(j, base->order());
    Polynomial wa = lift(*pv.witness_a, A, base);
    Polynomial wb = lift(*pv.witness_b, A, base);
    c.expect(!nf(wa, fresh).is_zero(), "witness_a lies in P + I");
    c.expect(!nf(wb, fresh).is_zero(), "witness_b lies in P + I");
    c.expect(nf(mul(wa, wb, base->order()), fresh).is_zero(),
             "witness product is not in P + I");
    c.expect(poly_str(*pv.witness_a, *A) == "z", "expected the witness z");
  }

  // M = A/xA has torsion; re-verify the witness pair independently.
  const auto& M = prog.find_module("M")->mod;
  TorsionReport tr = is_torsion_free(M);
  c.expect(tr.verdict == Verdict::False, "M was not flagged as torsion");
  c.expect(tr.witness_a.has_value() && tr.witness_m.has_value(),
           "no torsion witness attached");
  if (tr.witness_a && tr.witness_m) {
    c.expect(poly_str(*tr.witness_a, *A) == "x + y",
             "expected the regular element x + y");
    c.expect(is_regular(A, *tr.witness_a) == Verdict::True,
             "witness_a is not regular in A");
    IdealHandle ann = ann_element(M, *tr.witness_m);
    c.expect(!ann.contains(parse_poly("1", A)),
             "witness element is zero in M");
    c.expect(ann.contains(*tr.witness_a),
             "witness_a does not kill the witness element");
  }

  TqDimReport tq = total_quotient_dim(A);
  c.expect(tq.known == Verdict::True && tq.dim == 0,
           "dim Q(A) was not decided to be 0");

  // The corpus run must flag all three disagreements yet still succeed.
  CliResult res = run_command({"corpus", "--dir", kCorpusDir});
  c.expect(res.exit_code == 0, "corpus run failed");
  json rep = json::parse(res.out);
  bool found = false;
  for (const auto& item : rep["items"]) {
    if (item["item"] != "ex-4.6") continue;
    found = true;
    c.expect(item["expected"] == true, "ex-4.6 reconciliation failed");
    int flagged = 0;
    for (const auto& claim : item["claims"]) {
      std::string id = claim["anchor"];
      if (id == "ex-4.6/p-prime" || id == "ex-4.6/m-torsion-free" ||
          id == "ex-4.6/tq-dim") {
        ++flagged;
        c.expect(claim["status"] == "mismatch-flag",
                 id + " was not flagged as a mismatch");
      }
    }
    c.expect(flagged == 3, "expected three flagged claims");
  }
  c.expect(found, "ex-4.6 missing from the corpus report");
  c.finish();
}

TEST_CASE("criterion 5: split certificate and refusal") {
  Criterion c{5, "split: verified certificate and witnessed refusal", {}};
  auto A = quotient({"x", "y"}, {"x^2 - x"});
  SplitReport sp = split_at_minimal_prime(A, id_of(A, {"x"}));
  c.expect(!sp.refused, "split was refused");
  c.expect(sp.cert.has_value(), "no idempotent certificate");
  if (sp.cert) {
    auto base = poly_ring({"x", "y"});
    GroebnerBasis fresh =
        buchberger({parse_poly("x^2 - x", base)}, base->order());
    Polynomial e = lift(sp.cert->e, A, base);
    Polynomial a = lift(sp.cert->a, A, base);
    Polynomial b = lift(sp.cert->b, A, base);
    auto& ord = base->order();
    c.expect(nf(sub(mul(e, e, ord), e, ord), fresh).is_zero(),
             "e^2 - e does not vanish under a fresh basis");
    c.expect(
        nf(sub(mul(mul(a, a, ord), b, ord), a, ord), fresh).is_zero(),
        "a^2*b - a does not vanish under a fresh basis");
    Polynomial g = parse_poly("x", base);  // generator of P
    Polynomial one_minus_e = sub(parse_poly("1", base), e, ord);
    c.expect(nf(mul(one_minus_e, g, ord), fresh).is_zero(),
             "(1 - e)*g does not vanish under a fresh basis");
    for (const auto& [label, r] : sp.cert->residues)
      c.expect(r.is_zero(), "stored residue " + label + " is nonzero");
  }
  // Both components collapse to QQ[y]; compare reduced bases directly.
  for (const RingPtr* comp : {&sp.comp_zero, &sp.comp_one}) {
    const auto& elems = (*comp)->defining_basis().elems;
    c.expect(elems.size() == 1 && elems[0].total_degree() == 1,
             "component is not cut out by one linear equation in x");
  }
  c.expect(poly_str(sp.comp_zero->defining_basis().elems[0], *A) == "x",
           "first component is not A/(x)");
  c.expect(poly_str(sp.comp_one->defining_basis().elems[0], *A) == "x - 1",
           "second component is not A/(x - 1)");

  auto B = quotient({"x", "y"}, {"x*y"});
  SplitReport ref = split_at_minimal_prime(B, id_of(B, {"x"}));
  c.expect(ref.refused, "split on the non-idempotent prime was not refused");
  c.expect(ref.refusal_witness.has_value(), "refusal carries no witness");
  if (ref.refusal_witness) {
    auto base = poly_ring({"x", "y"});
    std::vector<Polynomial> p2{parse_poly("x^2", base),
                               parse_poly("x*y", base)};
    GroebnerBasis fresh = buchberger(p2, base->order());
    Polynomial w = lift(*ref.refusal_witness, B, base);
    c.expect(!nf(w, fresh).is_zero(), "witness lies in P^2 after all");
  }
  c.finish();
}

TEST_CASE("criterion 6: classification fixtures") {
  Criterion c{6, "semi-hereditary classification fixtures", {}};
  auto expect_classify = [&](const RingPtr& R, Verdict want,
                             const std::string& label) {
    ClassifyReport cr = classify_noetherian_semihereditary(R);
    c.expect(cr.verdict == want, label + " classified as " +
                                     to_string(cr.verdict) + ", wanted " +
                                     to_string(want));
  };
  expect_classify(poly_ring({"x"}), Verdict::True, "QQ[x]");
  expect_classify(quotient({"x", "y"}, {"y^2 - x^3 + x"}), Verdict::True,
                  "smooth plane curve");
  expect_classify(quotient({"x", "y"}, {"x^2 - x"}), Verdict::True,
                  "split pair of planes");
  expect_classify(quotient({"x", "y"}, {"x*y"}), Verdict::False,
                  "crossing lines");
  expect_classify(quotient({"x", "y"}, {"y^2 - x^3"}), Verdict::False,
                  "cuspidal curve");
  expect_classify(quotient({"x", "y", "z"}, {"x*y", "y*z", "z^2"}),
                  Verdict::False, "non-reduced monomial ring");
  c.finish();
}

TEST_CASE("criterion 7: torsion-free vs flat on random modules") {
  Criterion c{7, "torsion-free vs flat over classified rings", {}};
  std::vector<RingPtr> rings{poly_ring({"x"}),
                             quotient({"x", "y"}, {"y^2 - x^3 + x"}),
                             quotient({"x", "y"}, {"x^2 - x"})};
  std::mt19937_64 rng(0x5eed0007);
  int total = 0;
  int decided_tf = 0;
  for (const auto& R : rings) {
    for (int k = 0; k < 17; ++k) {
      std::size_t gens = 1 + rng() % 2;
      std::size_t ncols = rng() % 3;
      std::vector<Vec> cols;
      for (std::size_t j = 0; j < ncols; ++j) {
        Vec col;
        for (std::size_t i = 0; i < gens; ++i)
          col.push_back(oracle::random_poly(rng, R, 2, 1 + rng() % 2));
        cols.push_back(col);
      }
      FPModule M(R, gens, cols);
      TorsionReport tr = is_torsion_free(M);
      FlatReport fl = is_flat_fp(M);
      if (tr.verdict == Verdict::True) {
        ++decided_tf;
        c.expect(fl.verdict == Verdict::True,
                 "torsion-free module #" + std::to_string(total) +
                     " was not decided flat");
      }
      if (fl.verdict == Verdict::True)
        c.expect(tr.verdict != Verdict::False,
                 "flat module #" + std::to_string(total) +
                     " was decided to have torsion");
      ++total;
    }
  }
  c.expect(total >= 50, "fewer than 50 modules sampled");
  c.expect(decided_tf >= 10, "too few torsion-free decisions to be meaningful");
  c.finish();
}

TEST_CASE("criterion 8: von Neumann regular fixtures") {
  Criterion c{8, "von Neumann regularity on the five fixtures", {}};
  auto expect_vnr = [&](const RingPtr& R, Verdict want,
                        const std::string& label) {
    VnrReport vr = is_vnr(R);
    c.expect(vr.verdict == want, label + ": got " + to_string(vr.verdict));
  };
  expect_vnr(poly_ring({}), Verdict::True, "QQ");
  expect_vnr(poly_ring({}, 5), Verdict::True, "GF(5)");
  expect_vnr(quotient({"x"}, {"x^2 - x"}), Verdict::True, "QQ[x]/(x^2 - x)");
  expect_vnr(quotient({"x"}, {"x^2"}), Verdict::False, "QQ[x]/(x^2)");
  expect_vnr(poly_ring({"x"}), Verdict::False, "QQ[x]");
  c.finish();
}

TEST_CASE("criterion 9: frobenius flatness vs pushforward oracle") {
  Criterion c{9, "frobenius flatness vs the pushforward module", {}};
  struct Item {
    RingPtr ring;
    Verdict want;
    std::string label;
  };
  std::vector<Item> items{
      {poly_ring({"x"}, 3), Verdict::True, "GF(3)[x]"},
      {poly_ring({"x", "y"}, 2), Verdict::True, "GF(2)[x, y]"},
      {quotient({"x", "y"}, {"y^2 - x^3"}, 3), Verdict::False,
       "GF(3) cuspidal curve"}};
  for (const auto& it : items) {
    FrobeniusReport fr = frobenius_flat(it.ring);
    c.expect(fr.flat == it.want,
             it.label + ": kunz verdict " + to_string(fr.flat));
    FlatReport push = is_flat_fp(frobenius_pushforward(it.ring));
    c.expect(push.verdict == fr.flat,
             it.label + ": pushforward oracle disagrees (" +
                 to_string(push.verdict) + " vs " + to_string(fr.flat) + ")");
  }
  c.finish();
}

TEST_CASE("criterion 10: corpus determinism") {
  Criterion c{10, "corpus runs deterministically and in budget", {}};
  auto t0 = std::chrono::steady_clock::now();
  CliResult r1 = run_command({"corpus", "--dir", kCorpusDir});
  CliResult r2 = run_command({"corpus", "--dir", kCorpusDir});
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  c.expect(r1.exit_code == 0, "first corpus run failed");
  c.expect(r2.exit_code == 0, "second corpus run failed");
  c.expect(scrub(r1.out) == scrub(r2.out),
           "outputs differ beyond the timestamp");
  c.expect(secs < 300, "two corpus runs took " + std::to_string(secs) + "s");
  json rep = json::parse(r1.out);
  c.expect(rep["ok"] == true, "corpus reconciliation failed");
  c.finish();
}
