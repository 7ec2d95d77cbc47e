#include "ringkit/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringkit/corpus.hpp"
#include "ringkit/kernels.hpp"
#include "ringkit/parser.hpp"
#include "ringkit/printer.hpp"
#include "ringkit/ringstruct.hpp"

namespace ringkit {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot read file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string iso_now() {
  std::time_t tt =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  return buf;
}

json polys_json(const std::vector<Polynomial>& fs, const RingPresentation& r) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(poly_str(f, r));
  return out;
}

json primes_json(const std::vector<MonPrime>& ps, const RingPresentation& r) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(monprime_str(p, r));
  return out;
}

json prime_json(const PrimeVerdict& pv, const RingPresentation& r) {
  json out{{"verdict", to_string(pv.verdict)},
           {"path", pv.path},
           {"note", pv.note}};
  if (pv.witness_a) out["witness_a"] = poly_str(*pv.witness_a, r);
  if (pv.witness_b) out["witness_b"] = poly_str(*pv.witness_b, r);
  return out;
}

json reduced_json(const ReducedReport& rr, const RingPresentation& r) {
  json out{{"verdict", to_string(rr.verdict)},
           {"path", rr.path},
           {"note", rr.note}};
  if (rr.witness) {
    out["witness"] = poly_str(*rr.witness, r);
    out["witness_power"] = rr.witness_power;
  }
  return out;
}

json torsion_json(const TorsionReport& tr, const RingPresentation& r) {
  json out{{"verdict", to_string(tr.verdict)},
           {"path", tr.path},
           {"note", tr.note}};
  if (tr.witness_a) out["witness_a"] = poly_str(*tr.witness_a, r);
  if (tr.witness_m) out["witness_m"] = vec_str(*tr.witness_m, r);
  return out;
}

json cert_json(const IdempotentCert& cert, const RingPresentation& r) {
  json residues = json::object();
  for (const auto& res : cert.residues)
    residues[res.first] = poly_str(res.second, r);
  return json{{"e", poly_str(cert.e, r)},
              {"a", poly_str(cert.a, r)},
              {"b", poly_str(cert.b, r)},
              {"residues", residues}};
}

json regularity_json(const RegularityReport& rr, const RingPresentation& r) {
  json out{{"verdict", to_string(rr.verdict)},
           {"dim", rr.dim},
           {"path", rr.path},
           {"note", rr.note}};
  if (!rr.singular_basis.empty())
    out["singular_basis"] = polys_json(rr.singular_basis, r);
  return out;
}

json split_json(const SplitReport& sp, const RingPresentation& r) {
  json out{{"refused", sp.refused}};
  if (sp.refused) {
    out["reason"] = sp.reason;
    if (sp.refusal_witness)
      out["witness"] = poly_str(*sp.refusal_witness, r);
    if (sp.prime_check.verdict != Verdict::Unknown || !sp.prime_check.path.empty())
      out["prime_check"] = prime_json(sp.prime_check, r);
    return out;
  }
  out["prime_check"] = prime_json(sp.prime_check, r);
  out["certificate"] = cert_json(*sp.cert, r);
  out["components"] = json::array(
      {polys_json(sp.comp_zero->defining_basis().elems, *sp.comp_zero),
       polys_json(sp.comp_one->defining_basis().elems, *sp.comp_one)});
  return out;
}

json tree_json(const DecompNode& node) {
  json out{{"ring", ring_str(*node.ring)}, {"note", node.note}};
  if (node.leaf()) {
    out["domain"] = to_string(node.domain);
    out["refused_split"] = node.refused_split;
    out["unresolved"] = node.unresolved;
    if (node.refusal_witness)
      out["witness"] = poly_str(*node.refusal_witness, *node.ring);
  } else {
    out["e"] = poly_str(*node.split_e, *node.ring);
    json kids = json::array();
    for (const auto& c : node.children) kids.push_back(tree_json(c));
    out["children"] = kids;
  }
  return out;
}

json leaves_json(const RingPtr& root, const std::vector<DecompLeaf>& leaves) {
  json out = json::array();
  for (const auto& leaf : leaves) {
    json row{{"ring", ring_str(*leaf.ring)},
             {"domain", to_string(leaf.domain)},
             {"unit_part", poly_str(leaf.unit_part, *root)},
             {"refused_split", leaf.refused_split}};
    if (leaf.refusal_witness)
      row["witness"] = poly_str(*leaf.refusal_witness, *leaf.ring);
    out.push_back(row);
  }
  return out;
}

json classify_json(const RingPtr& ring, const ClassifyReport& cr) {
  json out{{"verdict", to_string(cr.verdict)},
           {"note", cr.note},
           {"reduced", reduced_json(cr.reduced, *ring)},
           {"tree", tree_json(cr.tree)},
           {"leaves", leaves_json(ring, cr.leaves)}};
  json dd = json::array();
  for (std::size_t i = 0; i < cr.leaf_reports.size(); ++i) {
    const DedekindReport& rep = cr.leaf_reports[i];
    json row{{"verdict", to_string(rep.verdict)},
             {"domain", to_string(rep.domain)},
             {"dim", rep.dim},
             {"note", rep.note}};
    if (!rep.singular_basis.empty())
      row["singular_basis"] = polys_json(rep.singular_basis, *cr.leaves[i].ring);
    dd.push_back(row);
  }
  out["dedekind"] = dd;
  return out;
}

json flat_json(const FlatReport& fr, const RingPresentation& r) {
  json out{{"verdict", to_string(fr.verdict)},
           {"simplified_gens", fr.simplified_gens}};
  if (fr.offending_r) {
    out["offending_r"] = static_cast<std::uint64_t>(*fr.offending_r);
    if (fr.offending_witness)
      out["offending_witness"] = poly_str(*fr.offending_witness, r);
  }
  if (!fr.certs.empty()) {
    json certs = json::array();
    for (const auto& c : fr.certs) certs.push_back(cert_json(c, r));
    out["certificates"] = certs;
  }
  return out;
}

const RingPtr& ring_of_ideal(const Program& prog,
                             const Program::NamedIdeal& ni) {
  return *prog.find_ring(ni.ring);
}

json run_check(const Program& prog, const Program::Statement& st) {
  json out{{"property", st.property}, {"target", st.target}};
  if (st.at) out["at"] = *st.at;
  if (st.property == "reduced") {
    const RingPtr& ring = *prog.find_ring(st.target);
    out["result"] = reduced_json(is_reduced(ring), *ring);
  } else if (st.property == "vnr") {
    const RingPtr& ring = *prog.find_ring(st.target);
    VnrReport vr = is_vnr(ring);
    out["result"] = json{{"verdict", to_string(vr.verdict)},
                         {"dim", vr.dim},
                         {"note", vr.note}};
  } else if (st.property == "regular") {
    const RingPtr& ring = *prog.find_ring(st.target);
    out["result"] = regularity_json(is_regular_ring(ring), *ring);
  } else if (st.property == "dedekind") {
    const RingPtr& ring = *prog.find_ring(st.target);
    DedekindReport dd = is_dedekind_domain(ring);
    json row{{"verdict", to_string(dd.verdict)},
             {"domain", to_string(dd.domain)},
             {"dim", dd.dim},
             {"note", dd.note}};
    if (!dd.singular_basis.empty())
      row["singular_basis"] = polys_json(dd.singular_basis, *ring);
    out["result"] = row;
  } else if (st.property == "tq_dim") {
    const RingPtr& ring = *prog.find_ring(st.target);
    TqDimReport tq = total_quotient_dim(ring);
    json row{{"known", to_string(tq.known)}, {"note", tq.note}};
    if (tq.known == Verdict::True) row["dim"] = tq.dim;
    out["result"] = row;
  } else if (st.property == "prime") {
    const Program::NamedIdeal& ni = *prog.find_ideal(st.target);
    out["result"] = prime_json(is_prime(ni.handle), *ni.handle.ring());
  } else if (st.property == "torsion_free") {
    const Program::NamedModule& nm = *prog.find_module(st.target);
    const RingPtr& ring = nm.mod.ring();
    if (st.at) {
      const Program::NamedIdeal& ni = *prog.find_ideal(*st.at);
      require(ni.ring == nm.ring, "module and ideal live in different rings");
      LocalizedTorsionReport lr = torsion_free_localized(nm.mod, ni.handle);
      json row{{"verdict", to_string(lr.verdict)},
               {"ill_posed", lr.ill_posed},
               {"path", lr.path},
               {"note", lr.note}};
      if (lr.witness_a) row["witness_a"] = poly_str(*lr.witness_a, *ring);
      if (lr.witness_m) row["witness_m"] = vec_str(*lr.witness_m, *ring);
      out["result"] = row;
    } else {
      out["result"] = torsion_json(is_torsion_free(nm.mod), *ring);
    }
  } else if (st.property == "flat") {
    const Program::NamedModule& nm = *prog.find_module(st.target);
    out["result"] = flat_json(is_flat_fp(nm.mod), *nm.mod.ring());
  } else {
    throw input_error("unsupported property " + st.property);
  }
  return out;
}

struct Invocation {
  std::string command;
  std::string file;
  std::string corpus_dir = "corpus";
  bool serial = false;
};

int execute(const Invocation& inv, CliResult& res) {
  set_default_exec_mode(inv.serial ? ExecMode::Serial : ExecMode::Parallel);
  auto t0 = std::chrono::steady_clock::now();

  if (inv.command == "corpus") {
    CorpusOutcome oc = run_corpus(inv.corpus_dir);
    json report = oc.report;
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
    report["generated_at"] = iso_now();
    res.out = report.dump(2) + "\n";
    return oc.expected ? 0 : 1;
  }

  Program prog = parse_declarations(read_file(inv.file));

  if (inv.command == "gb") {
    // One basis element per line, declaration syntax; ideal handles if any
    // were declared, defining ideals otherwise.
    std::string lines;
    if (!prog.ideals.empty()) {
      for (const auto& ni : prog.ideals) {
        const RingPtr& ring = ring_of_ideal(prog, ni);
        for (const auto& g : ni.handle.basis().elems)
          lines += poly_str(g, *ring) + "\n";
      }
    } else {
      for (const auto& nr : prog.rings)
        for (const auto& g : nr.ring->defining_basis().elems)
          lines += poly_str(g, *nr.ring) + "\n";
    }
    res.out = lines;
    return 0;
  }

  json results = json::array();
  if (inv.command == "dim") {
    for (const auto& nr : prog.rings)
      results.push_back({{"ring", nr.name}, {"dim", krull_dim(*nr.ring)}});
  } else if (inv.command == "colon") {
    require(prog.ideals.size() == 2 &&
                prog.ideals[0].ring == prog.ideals[1].ring,
            "colon needs exactly two ideals in one ring");
    const RingPtr& ring = ring_of_ideal(prog, prog.ideals[0]);
    IdealHandle q = colon(prog.ideals[0].handle, prog.ideals[1].handle);
    results.push_back({{"ring", prog.ideals[0].ring},
                       {"lhs", prog.ideals[0].name},
                       {"rhs", prog.ideals[1].name},
                       {"basis", polys_json(q.basis().elems, *ring)}});
  } else if (inv.command == "minprimes" || inv.command == "assprimes") {
    bool minimal = inv.command == "minprimes";
    auto emit = [&](const std::string& name, const IdealHandle& I) {
      const RingPresentation& ring = *I.ring();
      auto ps = minimal ? monomial_minimal_primes(I)
                        : monomial_associated_primes(I);
      results.push_back({{"target", name}, {"primes", primes_json(ps, ring)}});
    };
    if (!prog.ideals.empty())
      for (const auto& ni : prog.ideals) emit(ni.name, ni.handle);
    else
      for (const auto& nr : prog.rings) emit(nr.name, zero_ideal(nr.ring));
  } else if (inv.command == "isprime") {
    require(!prog.ideals.empty(), "no ideals declared");
    for (const auto& ni : prog.ideals)
      results.push_back({{"ideal", ni.name},
                         {"result", prime_json(is_prime(ni.handle),
                                               *ni.handle.ring())}});
  } else if (inv.command == "check") {
    for (const auto& st : prog.statements)
      if (st.kind == Program::Statement::Kind::Check)
        results.push_back(run_check(prog, st));
  } else if (inv.command == "split") {
    bool found = false;
    for (const auto& st : prog.statements) {
      if (st.kind != Program::Statement::Kind::Split) continue;
      found = true;
      const RingPtr& ring = *prog.find_ring(st.target);
      const Program::NamedIdeal& ni = *prog.find_ideal(*st.at);
      require(ni.ring == st.target, "split ideal lives in a different ring");
      results.push_back({{"ring", st.target},
                         {"at", ni.name},
                         {"result",
                          split_json(split_at_minimal_prime(ring, ni.handle),
                                     *ring)}});
    }
    require(found, "no split statements in the file");
  } else if (inv.command == "decompose") {
    auto emit = [&](const std::string& name, const RingPtr& ring) {
      DecompNode tree = decompose_fully(ring);
      results.push_back(
          {{"ring", name},
           {"tree", tree_json(tree)},
           {"leaves", leaves_json(ring, decomposition_leaves(ring, tree))}});
    };
    bool found = false;
    for (const auto& st : prog.statements)
      if (st.kind == Program::Statement::Kind::Decompose) {
        found = true;
        emit(st.target, *prog.find_ring(st.target));
      }
    if (!found)
      for (const auto& nr : prog.rings) emit(nr.name, nr.ring);
  } else if (inv.command == "classify") {
    auto emit = [&](const std::string& name, const RingPtr& ring) {
      results.push_back(
          {{"ring", name},
           {"result", classify_json(ring,
                                    classify_noetherian_semihereditary(ring))}});
    };
    bool found = false;
    for (const auto& st : prog.statements)
      if (st.kind == Program::Statement::Kind::Classify) {
        found = true;
        emit(st.target, *prog.find_ring(st.target));
      }
    if (!found)
      for (const auto& nr : prog.rings) emit(nr.name, nr.ring);
  } else if (inv.command == "frobenius") {
    for (const auto& nr : prog.rings) {
      require(!nr.ring->field().rational(),
              "frobenius needs a prime-field ring: " + nr.name);
      FrobeniusReport fr = frobenius_flat(nr.ring);
      results.push_back({{"ring", nr.name},
                         {"flat", to_string(fr.flat)},
                         {"note", fr.note},
                         {"regularity", regularity_json(fr.regularity,
                                                        *nr.ring)}});
    }
  } else {
    throw input_error("unknown subcommand " + inv.command);
  }

  json report{{"schema", 1}, {"command", inv.command}, {"results", results}};
  report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  report["generated_at"] = iso_now();
  res.out = report.dump(2) + "\n";
  return 0;
}

}  // namespace

CliResult run_command(const std::vector<std::string>& args) {
  CliResult res;
  CLI::App app{"exact ring and module checks for finitely presented rings"};
  app.require_subcommand(1);
  Invocation inv;
  app.add_flag("--serial", inv.serial, "run the kernels single-threaded");

  auto add_file_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("file", inv.file, "declaration file")->required();
    return sub;
  };
  add_file_cmd("gb", "reduced Groebner bases, one element per line");
  add_file_cmd("dim", "Krull dimension of each declared ring");
  add_file_cmd("colon", "colon of the two declared ideals");
  add_file_cmd("minprimes", "minimal primes (monomial presentations)");
  add_file_cmd("assprimes", "associated primes (monomial presentations)");
  add_file_cmd("isprime", "primality of each declared ideal");
  add_file_cmd("check", "run the check statements in the file");
  add_file_cmd("split", "run the split statements in the file");
  add_file_cmd("decompose", "idempotent decomposition of declared rings");
  add_file_cmd("classify", "semi-hereditary classification of declared rings");
  add_file_cmd("frobenius", "Frobenius flatness for prime-field rings");
  CLI::App* corpus = app.add_subcommand("corpus", "run the bundled examples");
  corpus->add_option("--dir", inv.corpus_dir, "corpus directory");

  std::vector<const char*> argv;
  argv.push_back("ringcheck");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      res.out = app.help();
      res.exit_code = 0;
    } else {
      res.err = std::string(e.what()) + "\n";
      res.exit_code = 1;
    }
    return res;
  }
  inv.command = app.get_subcommands().front()->get_name();

  try {
    res.exit_code = execute(inv, res);
  } catch (const input_error& e) {
    res.err = std::string("input error: ") + e.what() + "\n";
    res.exit_code = 1;
  } catch (const internal_error& e) {
    res.err = std::string("internal error: ") + e.what() + "\n";
    res.exit_code = 2;
  } catch (const std::exception& e) {
    res.err = std::string("internal error: ") + e.what() + "\n";
    res.exit_code = 2;
  }
  return res;
}

}  // namespace ringkit
