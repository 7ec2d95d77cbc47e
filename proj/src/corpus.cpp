#include "ringkit/corpus.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "ringkit/parser.hpp"
#include "ringkit/printer.hpp"
#include "ringkit/ringstruct.hpp"

namespace ringkit {

namespace {

using nlohmann::json;

struct Claim {
  std::string anchor;
  std::string claimed;
  std::string computed;
  std::string expected;  // match | mismatch-flag | ill-posed
};

struct ItemResult {
  std::vector<Claim> claims;
  json witnesses = json::object();
  json certificates = json::object();
};

std::string status_of(const Claim& c) {
  if (c.computed == c.claimed) return "match";
  if (c.computed == "ill-posed") return "ill-posed";
  return "mismatch-flag";
}

// --- independent re-verification helpers (fresh bases, raw generators) ---

GroebnerBasis fresh_basis(const RingPtr& ring,
                          const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = ring->defining();
  for (const auto& g : extra) gens.push_back(ring->adopt(g));
  return buchberger(gens, ring->order());
}

void verify_zero_fresh(const RingPtr& ring, const std::vector<Polynomial>& mod,
                       const Polynomial& f, const std::string& what) {
  invariant(nf(ring->adopt(f), fresh_basis(ring, mod)).is_zero(),
            "corpus: " + what + " does not reduce to zero");
}

void verify_nonzero_fresh(const RingPtr& ring,
                          const std::vector<Polynomial>& mod,
                          const Polynomial& f, const std::string& what) {
  invariant(!nf(ring->adopt(f), fresh_basis(ring, mod)).is_zero(),
            "corpus: " + what + " reduces to zero");
}

void verify_regular(const RingPtr& ring, const Polynomial& a,
                    const std::string& what) {
  invariant(is_regular(ring, a) == Verdict::True,
            "corpus: " + what + " is not a regular element");
}

// Torsion witness: a regular, m nonzero in M, a*m in the relation span.
void verify_torsion_witness(const FPModule& M, const Polynomial& a,
                            const Vec& m) {
  const RingPtr& A = M.ring();
  const MonomialOrder& ord = A->order();
  auto gb = module_buchberger(module_gens_over(A, M.cols()), ord);
  invariant(!module_member(m, gb, ord), "corpus: torsion element is zero");
  invariant(module_member(vec_mul(m, a, ord), gb, ord),
            "corpus: product leaves the relation span");
  verify_regular(A, a, "torsion multiplier");
}

bool has_constant_term(const Polynomial& f) {
  for (const auto& t : f.terms())
    if (t.m.total_degree() == 0) return true;
  return false;
}

std::string monprimes_str(const std::vector<MonPrime>& ps,
                          const RingPresentation& ring) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += monprime_str(ps[i], ring);
  }
  return out + "}";
}

MonPrime full_prime(const RingPresentation& ring) {
  MonPrime p;
  for (std::size_t v = 0; v < ring.arity(); ++v) p.vars.push_back(v);
  return p;
}

const RingPtr& named_ring(const Program& prog, const std::string& name) {
  const RingPtr* r = prog.find_ring(name);
  invariant(r != nullptr, "corpus: missing ring " + name);
  return *r;
}

const IdealHandle& named_ideal(const Program& prog, const std::string& name) {
  const Program::NamedIdeal* i = prog.find_ideal(name);
  invariant(i != nullptr, "corpus: missing ideal " + name);
  return i->handle;
}

const FPModule& named_module(const Program& prog, const std::string& name) {
  const Program::NamedModule* m = prog.find_module(name);
  invariant(m != nullptr, "corpus: missing module " + name);
  return m->mod;
}

json witness_pair_json(const RingPresentation& ring, const Polynomial& a,
                       const Vec& m) {
  return json{{"regular", poly_str(a, ring)}, {"element", vec_str(m, ring)}};
}

// ------------------------------- items ----------------------------------

ItemResult item_ex_4_6(const Program& prog) {
  const RingPtr& A = named_ring(prog, "A");
  const IdealHandle& P = named_ideal(prog, "P");
  const FPModule& M = named_module(prog, "M");
  ItemResult out;

  PrimeVerdict pv = is_prime(P);
  invariant(pv.verdict == Verdict::False && pv.witness_a && pv.witness_b,
            "corpus: expected a decided non-prime with witness");
  verify_nonzero_fresh(A, P.gens(), *pv.witness_a, "prime witness a");
  verify_nonzero_fresh(A, P.gens(), *pv.witness_b, "prime witness b");
  verify_zero_fresh(A, P.gens(),
                    mul(*pv.witness_a, *pv.witness_b, A->order()),
                    "prime witness product");
  out.claims.push_back({"ex-4.6/p-prime", "true", to_string(pv.verdict),
                        "mismatch-flag"});
  out.witnesses["p-prime"] = {{"a", poly_str(*pv.witness_a, *A)},
                              {"b", poly_str(*pv.witness_b, *A)},
                              {"path", pv.path}};

  TorsionReport tr = is_torsion_free(M);
  invariant(tr.verdict == Verdict::False && tr.witness_a && tr.witness_m,
            "corpus: expected decided torsion with witness");
  verify_torsion_witness(M, *tr.witness_a, *tr.witness_m);
  out.claims.push_back({"ex-4.6/m-torsion-free", "true", to_string(tr.verdict),
                        "mismatch-flag"});
  out.witnesses["m-torsion-free"] =
      witness_pair_json(*A, *tr.witness_a, *tr.witness_m);

  LocalizedTorsionReport lr = torsion_free_localized(M, P);
  invariant(lr.ill_posed, "corpus: localization should be ill-posed");
  out.claims.push_back(
      {"ex-4.6/mp-torsion-free", "false", "ill-posed", "ill-posed"});
  out.witnesses["mp-torsion-free"] = {{"note", lr.note}};

  TqDimReport tq = total_quotient_dim(A);
  invariant(tq.known == Verdict::True, "corpus: tq dimension undecided");
  out.claims.push_back(
      {"ex-4.6/tq-dim", "2", std::to_string(tq.dim), "mismatch-flag"});

  auto prof = zero_divisors_profile(A);
  invariant(prof.monomial, "corpus: expected a monomial profile");
  bool max_assoc = false;
  for (const auto& q : prof.ass) max_assoc = max_assoc || q == full_prime(*A);
  // "Every regular element is a unit" for a local monomial presentation
  // means the variable maximal ideal is associated.
  out.claims.push_back({"ex-4.6/regular-units", "true",
                        max_assoc ? "true" : "false", "mismatch-flag"});
  verify_regular(A, *tr.witness_a, "regular non-unit");
  invariant(!has_constant_term(A->reduce(*tr.witness_a)),
            "corpus: witness is a unit");
  out.witnesses["regular-units"] = {
      {"regular-non-unit", poly_str(*tr.witness_a, *A)},
      {"associated", monprimes_str(prof.ass, *A)}};
  return out;
}

ItemResult item_ex_4_7(const Program& prog) {
  const RingPtr& A = named_ring(prog, "A");
  const IdealHandle& P = named_ideal(prog, "P");
  const FPModule& M = named_module(prog, "M");
  ItemResult out;

  auto mins = monomial_minimal_primes(zero_ideal(A));
  out.claims.push_back(
      {"ex-4.7-n5/minimal-primes",
       "{(X3, X4, X5), (X1, X2, X3, X4), (X1, X2, X3, X5), (X1, X2, X4, X5)}",
       monprimes_str(mins, *A), "match"});

  ReducedReport rr = is_reduced(A);
  out.claims.push_back(
      {"ex-4.7-n5/reduced", "true", to_string(rr.verdict), "match"});

  TorsionReport tr = is_torsion_free(M);
  invariant(tr.verdict == Verdict::False && tr.witness_a && tr.witness_m,
            "corpus: expected decided torsion with witness");
  verify_torsion_witness(M, *tr.witness_a, *tr.witness_m);
  out.claims.push_back({"ex-4.7-n5/m-torsion-free", "true",
                        to_string(tr.verdict), "mismatch-flag"});
  out.witnesses["m-torsion-free"] =
      witness_pair_json(*A, *tr.witness_a, *tr.witness_m);

  LocalizedTorsionReport lr = torsion_free_localized(M, P);
  invariant(!lr.ill_posed, "corpus: P should be prime here");
  invariant(lr.verdict == Verdict::False && lr.witness_a && lr.witness_m,
            "corpus: expected localized torsion with witness");
  // a stays regular after localization: it avoids every associated prime
  // of A inside P; globally a*m lands in the span and (span : m) stays
  // inside P, so m survives in M_P.
  {
    const MonomialOrder& ord = A->order();
    auto gb = module_buchberger(module_gens_over(A, M.cols()), ord);
    invariant(module_member(vec_mul(*lr.witness_m, *lr.witness_a, ord), gb, ord),
              "corpus: localized product misses the span");
    invariant(!module_member(*lr.witness_m, gb, ord),
              "corpus: localized torsion element is globally zero");
    Polynomial ar = A->reduce(*lr.witness_a);
    for (const auto& q : monomial_associated_primes(zero_ideal(A)))
      if (monprime_subset(q, MonPrime{{1, 2, 3, 4}}))
        invariant(!monprime_contains(q, ar),
                  "corpus: localized multiplier is a zero divisor in A_P");
  }
  out.claims.push_back({"ex-4.7-n5/mp-torsion-free", "false",
                        to_string(lr.verdict), "match"});
  out.witnesses["mp-torsion-free"] =
      witness_pair_json(*A, *lr.witness_a, *lr.witness_m);

  TqDimReport tq = total_quotient_dim(A);
  invariant(tq.known == Verdict::True, "corpus: tq dimension undecided");
  out.claims.push_back(
      {"ex-4.7-n5/tq-dim", "2", std::to_string(tq.dim), "mismatch-flag"});

  auto prof = zero_divisors_profile(A);
  bool max_assoc = false;
  for (const auto& q : prof.ass) max_assoc = max_assoc || q == full_prime(*A);
  out.claims.push_back({"ex-4.7-n5/regular-const-term", "true",
                        max_assoc ? "true" : "false", "mismatch-flag"});
  verify_regular(A, *tr.witness_a, "constant-free regular element");
  invariant(!has_constant_term(A->reduce(*tr.witness_a)),
            "corpus: witness has a constant term");
  out.witnesses["regular-const-term"] = {
      {"regular-without-constant-term", poly_str(*tr.witness_a, *A)}};
  return out;
}

ItemResult item_ex_4_8(const Program& prog) {
  const RingPtr& A = named_ring(prog, "A");
  const IdealHandle& P1 = named_ideal(prog, "P1");
  const IdealHandle& Pm = named_ideal(prog, "Pm");
  const FPModule& M = named_module(prog, "M");
  ItemResult out;

  auto ass = monomial_associated_primes(zero_ideal(A));
  out.claims.push_back({"ex-4.8/spec-primes", "{(x), (x, y)}",
                        monprimes_str(ass, *A), "match"});

  bool max_assoc = false;
  for (const auto& q : ass) max_assoc = max_assoc || q == full_prime(*A);
  out.claims.push_back(
      {"ex-4.8/regular-units", "true", max_assoc ? "true" : "false", "match"});

  TqDimReport tq = total_quotient_dim(A);
  invariant(tq.known == Verdict::True, "corpus: tq dimension undecided");
  out.claims.push_back(
      {"ex-4.8/tq-dim", "1", std::to_string(tq.dim), "match"});

  TorsionReport tr = is_torsion_free(M);
  out.claims.push_back({"ex-4.8/m-torsion-free", "true", to_string(tr.verdict),
                        "match"});

  LocalizedTorsionReport l1 = torsion_free_localized(M, P1);
  invariant(!l1.ill_posed, "corpus: (x) should be prime");
  out.claims.push_back({"ex-4.8/mp-torsion-free-p", "true",
                        to_string(l1.verdict), "match"});
  LocalizedTorsionReport lm = torsion_free_localized(M, Pm);
  invariant(!lm.ill_posed, "corpus: (x, y) should be prime");
  out.claims.push_back({"ex-4.8/mp-torsion-free-m", "true",
                        to_string(lm.verdict), "match"});
  return out;
}

ItemResult item_prop_5(const Program& prog) {
  const RingPtr& A = named_ring(prog, "A");
  const IdealHandle& P = named_ideal(prog, "P");
  const RingPtr& B = named_ring(prog, "B");
  const IdealHandle& Q = named_ideal(prog, "Q");
  ItemResult out;

  bool idem = ideal_equal(ideal_product(P, P), P);
  out.claims.push_back(
      {"prop-5/p-idempotent", "true", idem ? "true" : "false", "match"});

  SplitReport sp = split_at_minimal_prime(A, P);
  invariant(!sp.refused && sp.cert, "corpus: split should succeed");
  const IdempotentCert& cert = *sp.cert;
  verify_zero_fresh(A, {},
                    sub(mul(cert.e, cert.e, A->order()), cert.e, A->order()),
                    "e^2 - e");
  for (const auto& g : P.gens())
    verify_zero_fresh(A, {cert.e}, g, "prime generator modulo (e)");
  verify_zero_fresh(A, P.gens(), cert.e, "e modulo the prime");
  for (const auto& r : cert.residues)
    verify_zero_fresh(A, {}, r.second, "certificate residue " + r.first);
  out.claims.push_back({"prop-5/split", "true", "true", "match"});
  out.certificates["split"] = {{"e", poly_str(cert.e, *A)},
                               {"a", poly_str(cert.a, *A)},
                               {"b", poly_str(cert.b, *A)}};

  auto comp_str = [](const RingPtr& comp) {
    std::string s = "(";
    const auto& elems = comp->defining_basis().elems;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (i) s += ", ";
      s += poly_str(elems[i], *comp);
    }
    return s + ")";
  };
  std::string comps = comp_str(sp.comp_zero) + " and " + comp_str(sp.comp_one);
  out.claims.push_back(
      {"prop-5/components", "(x) and (x - 1)", comps, "match"});

  PrimeVerdict d0 = is_prime(zero_ideal(sp.comp_zero));
  PrimeVerdict d1 = is_prime(zero_ideal(sp.comp_one));
  bool domains = d0.verdict == Verdict::True && d1.verdict == Verdict::True;
  out.claims.push_back(
      {"prop-5/comp-domains", "true", domains ? "true" : "false", "match"});

  SplitReport sq = split_at_minimal_prime(B, Q);
  invariant(sq.refused && sq.refusal_witness,
            "corpus: split at (x) in B should refuse");
  std::vector<Polynomial> q2;
  for (const auto& g : Q.gens())
    for (const auto& h : Q.gens()) q2.push_back(mul(g, h, B->order()));
  verify_nonzero_fresh(B, q2, *sq.refusal_witness,
                       "refusal witness modulo P^2");
  out.claims.push_back({"prop-5/q-not-idempotent", "true", "true", "match"});
  out.witnesses["q-not-idempotent"] = {
      {"generator", poly_str(*sq.refusal_witness, *B)},
      {"reason", sq.reason}};

  ClassifyReport cb = classify_noetherian_semihereditary(B);
  out.claims.push_back({"prop-5/b-not-semihereditary", "true",
                        cb.verdict == Verdict::False ? "true" : "false",
                        "match"});
  return out;
}

ItemResult item_cor_noetherian(const Program& prog) {
  ItemResult out;
  const struct {
    const char* ring;
    const char* anchor;
    const char* claimed;
  } rows[] = {
      {"R1", "cor-noetherian/r1", "true"},
      {"R2", "cor-noetherian/r2", "true"},
      {"R3", "cor-noetherian/r3", "true"},
      {"N1", "cor-noetherian/n1", "false"},
      {"N2", "cor-noetherian/n2", "false"},
      {"N3", "cor-noetherian/n3", "false"},
  };
  for (const auto& row : rows) {
    ClassifyReport cr =
        classify_noetherian_semihereditary(named_ring(prog, row.ring));
    out.claims.push_back(
        {row.anchor, row.claimed, to_string(cr.verdict), "match"});
    out.witnesses[row.ring] = {{"note", cr.note}};
  }

  const RingPtr& R3 = named_ring(prog, "R3");
  auto leaves = decomposition_leaves(R3, decompose_fully(R3));
  bool two_domains = leaves.size() == 2;
  for (const auto& leaf : leaves)
    two_domains = two_domains && leaf.domain == Verdict::True;
  out.claims.push_back({"cor-noetherian/r3-decomposition", "2 domains",
                        two_domains ? "2 domains" : "other", "match"});
  return out;
}

ItemResult item_kunz(const Program& prog, const std::string& id,
                     const char* claimed) {
  const RingPtr& A = named_ring(prog, "A");
  ItemResult out;
  FrobeniusReport fr = frobenius_flat(A);
  out.claims.push_back({id + "/flat", claimed, to_string(fr.flat), "match"});
  out.witnesses["regularity"] = {{"path", fr.regularity.path},
                                 {"note", fr.regularity.note}};

  FPModule push = frobenius_pushforward(A);
  FlatReport fl = is_flat_fp(push);
  out.claims.push_back(
      {id + "/pushforward-oracle", claimed, to_string(fl.verdict), "match"});
  invariant(fr.flat == fl.verdict,
            "corpus: Jacobian and pushforward verdicts disagree");
  if (fl.offending_witness)
    out.witnesses["pushforward"] = {
        {"offending-r", static_cast<std::uint64_t>(*fl.offending_r)},
        {"witness", poly_str(*fl.offending_witness, *A)}};
  return out;
}

struct ItemSpec {
  std::string id;
  std::function<ItemResult(const Program&)> run;
};

const std::vector<ItemSpec>& items() {
  static const std::vector<ItemSpec> specs = {
      {"cor-noetherian", item_cor_noetherian},
      {"ex-4.6", item_ex_4_6},
      {"ex-4.7-n5", item_ex_4_7},
      {"ex-4.8", item_ex_4_8},
      {"kunz-cusp",
       [](const Program& p) { return item_kunz(p, "kunz-cusp", "false"); }},
      {"kunz-poly1",
       [](const Program& p) { return item_kunz(p, "kunz-poly1", "true"); }},
      {"kunz-poly2",
       [](const Program& p) { return item_kunz(p, "kunz-poly2", "true"); }},
      {"prop-5-split", item_prop_5},
  };
  return specs;
}

}  // namespace

std::vector<std::string> corpus_item_ids() {
  std::vector<std::string> out;
  for (const auto& s : items()) out.push_back(s.id);
  return out;
}

CorpusOutcome run_corpus(const std::string& dir) {
  CorpusOutcome out;
  json item_reports = json::array();
  for (const auto& spec : items()) {
    std::string path = dir + "/" + spec.id + ".ring";
    std::ifstream in(path);
    require(in.good(), "cannot read corpus file " + path);
    std::stringstream buf;
    buf << in.rdbuf();

    auto t0 = std::chrono::steady_clock::now();
    Program prog = parse_declarations(buf.str());
    ItemResult res = spec.run(prog);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    json claims = json::array();
    bool item_expected = true;
    for (const auto& c : res.claims) {
      std::string status = status_of(c);
      item_expected = item_expected && status == c.expected;
      claims.push_back({{"anchor", c.anchor},
                        {"claimed", c.claimed},
                        {"computed", c.computed},
                        {"status", status}});
    }
    out.expected = out.expected && item_expected;
    item_reports.push_back({{"item", spec.id},
                            {"claims", claims},
                            {"expected", item_expected},
                            {"witnesses", res.witnesses},
                            {"certificates", res.certificates},
                            {"timing_ms", ms}});
  }
  out.report = {{"schema", 1},
                {"command", "corpus"},
                {"items", item_reports},
                {"ok", out.expected}};
  return out;
}

}  // namespace ringkit
