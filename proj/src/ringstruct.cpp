#include "ringkit/ringstruct.hpp"

#include <algorithm>
#include <set>

#include "ringkit/kernels.hpp"
#include "ringkit/util.hpp"

namespace ringkit {

ReducedReport is_reduced(const RingPtr& ring) {
  const MonomialOrder& ord = ring->order();
  const auto& B = ring->defining_basis().elems;
  ReducedReport out;

  if (B.empty()) {
    out.verdict = Verdict::True;
    out.path = "zero";
    out.note = "polynomial ring";
    return out;
  }

  if (ring->defining_is_monomial()) {
    for (const auto& e : B) {
      const Monomial& m = e.leading_monomial();
      for (std::size_t v = 0; v < m.arity(); ++v) {
        if (m[v] < 2) continue;
        Monomial w = m;
        w[v] -= 1;
        Polynomial wp =
            Polynomial::monomial(ring->id(), w, Coeff::one(ring->field()));
        invariant(!ring->reduce(wp).is_zero(), "witness vanishes");
        out.verdict = Verdict::False;
        out.path = "monomial";
        out.note = "non-squarefree minimal generator";
        out.witness = wp;
        out.witness_power = 2;
        return out;
      }
    }
    out.verdict = Verdict::True;
    out.path = "monomial";
    out.note = "squarefree monomial ideals are radical";
    return out;
  }

  if (B.size() == 1) {
    Polynomial f = monic(B[0]);
    Polynomial rad = poly_radical(f, *ring);
    if (rad == f) {
      out.verdict = Verdict::True;
      out.path = "hypersurface";
      out.note = "squarefree generator";
      return out;
    }
    Polynomial d = exact_div(f, rad, ord);
    Polynomial r2 = ring_gcd(rad, d, *ring);
    Polynomial h = exact_div(f, r2, ord);
    invariant(!ring->reduce(h).is_zero(), "witness vanishes");
    invariant(ring->reduce(mul(h, h, ord)).is_zero(),
              "witness square does not vanish");
    out.verdict = Verdict::False;
    out.path = "hypersurface";
    out.note = "generator has a repeated factor";
    out.witness = ring->reduce(h);
    out.witness_power = 2;
    return out;
  }

  if (krull_dim(*ring) == 0) {
    IdealHandle z = zero_ideal(ring);
    IdealHandle rad = radical_zero_dim(z);
    if (ideal_equal(rad, z)) {
      out.verdict = Verdict::True;
      out.path = "zero-dim";
      out.note = "ideal equals its radical";
      return out;
    }
    for (const auto& g : rad.gens()) {
      Polynomial r = ring->reduce(g);
      if (r.is_zero()) continue;
      invariant(radical_member(r, z), "radical witness misses the radical");
      unsigned k = 2;
      Polynomial pw = ring->reduce(mul(r, r, ord));
      while (!pw.is_zero() && k < 64) {
        pw = ring->reduce(mul(pw, r, ord));
        ++k;
      }
      invariant(pw.is_zero(), "nilpotency power out of range");
      out.verdict = Verdict::False;
      out.path = "zero-dim";
      out.note = "radical strictly contains the ideal";
      out.witness = r;
      out.witness_power = k;
      return out;
    }
    throw internal_error("strict radical without a fresh generator");
  }

  out.verdict = Verdict::Unknown;
  out.path = "none";
  out.note = "no decision path applies to this presentation";
  return out;
}

VnrReport is_vnr(const RingPtr& ring) {
  VnrReport out;
  out.dim = krull_dim(*ring);
  if (out.dim != 0) {
    out.verdict = Verdict::False;
    out.note = "positive Krull dimension";
    return out;
  }
  out.reduced = is_reduced(ring);
  out.verdict = out.reduced.verdict;
  out.note = out.reduced.verdict == Verdict::True
                 ? "zero-dimensional and reduced"
                 : "zero-dimensional but not reduced";
  if (out.reduced.verdict == Verdict::Unknown)
    out.note = "reducedness undecided";
  return out;
}

TqDimReport total_quotient_dim(const RingPtr& ring) {
  TqDimReport out;
  if (ring->defining_is_monomial() && !ring->defining_basis().elems.empty()) {
    auto ass = monomial_associated_primes(zero_ideal(ring));
    auto mins = monomial_minimal_primes(zero_ideal(ring));
    unsigned best = 0;
    for (const auto& q : ass) {
      unsigned height = 0;
      for (const auto& p : mins)
        if (monprime_subset(p, q))
          height = std::max(
              height, static_cast<unsigned>(q.vars.size() - p.vars.size()));
      best = std::max(best, height);
    }
    out.known = Verdict::True;
    out.dim = best;
    out.note = "heights of the associated primes of a monomial presentation";
    return out;
  }
  PrimeVerdict dv = is_prime(zero_ideal(ring));
  if (dv.verdict == Verdict::True) {
    out.known = Verdict::True;
    out.dim = 0;
    out.note = "domain: the total quotient ring is a field";
    return out;
  }
  if (krull_dim(*ring) == 0) {
    out.known = Verdict::True;
    out.dim = 0;
    out.note = "zero-dimensional ring equals its total quotient ring";
    return out;
  }
  out.note = "no decision path applies to this presentation";
  return out;
}

SplitReport split_at_minimal_prime(const RingPtr& ring, const IdealHandle& P) {
  require(P.ring() && P.ring()->id() == ring->id(),
          "prime belongs to a different ring");
  const MonomialOrder& ord = ring->order();
  SplitReport out;

  if (P.gens().empty()) {
    out.refused = true;
    out.reason = "splitting at the zero ideal is the trivial factorization";
    return out;
  }
  if (P.is_unit_ideal()) {
    out.refused = true;
    out.reason = "the unit ideal is not prime";
    return out;
  }

  out.prime_check = is_prime(P);
  if (out.prime_check.verdict == Verdict::False) {
    out.refused = true;
    out.reason = "the ideal is not prime (" + out.prime_check.path + ")";
    out.refusal_witness = out.prime_check.witness_a;
    return out;
  }
  if (out.prime_check.verdict == Verdict::Unknown) {
    out.refused = true;
    out.reason = "primality of the ideal is undecided";
    return out;
  }

  for (const auto& g : P.gens()) {
    Verdict zd = is_regular(ring, g) == Verdict::True ? Verdict::False
                                                      : Verdict::True;
    out.zero_divisor_checks.emplace_back(g, zd);
    if (zd == Verdict::False) {
      out.refused = true;
      out.reason = "a generator is a regular element, so the prime is not "
                   "minimal";
      out.refusal_witness = g;
      return out;
    }
  }

  IdealHandle P2 = ideal_product(P, P);
  for (const auto& g : P.gens()) {
    if (P2.contains(g)) continue;
    out.refused = true;
    out.reason = "the prime is not idempotent; the ring is not "
                 "semi-hereditary at it";
    out.refusal_witness = g;
    return out;
  }

  out.cert = idempotent_from_idem_ideal(P);
  const Polynomial& e = out.cert->e;
  IdealHandle pe(ring, {e});
  invariant(ideal_equal(P, pe), "idempotent fails to generate the prime");

  std::vector<Polynomial> def_zero = ring->defining();
  def_zero.push_back(e);
  std::vector<Polynomial> def_one = ring->defining();
  def_one.push_back(ring->reduce(sub(ring->one(), e, ord)));
  out.comp_zero = RingPresentation::make(ring->vars(), ring->field(),
                                         def_zero, ring->local(), ord);
  out.comp_one = RingPresentation::make(ring->vars(), ring->field(), def_one,
                                        ring->local(), ord);
  return out;
}

namespace {

// Candidate minimal primes of (0), in a deterministic order; nullopt when
// no decision path lists them.
std::optional<std::vector<IdealHandle>> minimal_prime_candidates(
    const RingPtr& ring) {
  const auto& B = ring->defining_basis().elems;
  if (B.empty()) return std::vector<IdealHandle>{};
  if (ring->defining_is_monomial()) {
    std::vector<IdealHandle> out;
    for (const auto& p : monomial_minimal_primes(zero_ideal(ring)))
      out.push_back(monprime_handle(ring, p));
    return out;
  }
  if (B.size() == 1) {
    auto fac = distinct_irreducible_factors(B[0], *ring);
    if (!fac) return std::nullopt;
    std::vector<IdealHandle> out;
    for (const auto& p : *fac) out.push_back(IdealHandle(ring, {p}));
    return out;
  }
  return std::nullopt;
}

DecompNode decompose_rec(const RingPtr& ring, unsigned depth) {
  invariant(depth < 32, "decomposition recursion too deep");
  DecompNode node;
  node.ring = ring;

  auto cands = minimal_prime_candidates(ring);
  if (!cands) {
    node.domain = is_prime(zero_ideal(ring)).verdict;
    node.unresolved = node.domain != Verdict::True;
    node.note = "minimal primes unavailable for this presentation";
    return node;
  }
  // Drop candidates that normalize to (0): a domain keeps a single leaf.
  std::vector<IdealHandle> live;
  for (auto& c : *cands)
    if (!c.gens().empty()) live.push_back(std::move(c));

  if (live.size() <= 1) {
    PrimeVerdict dv = is_prime(zero_ideal(ring));
    node.domain = dv.verdict;
    node.note = "single minimal prime (" + dv.path + ")";
    return node;
  }

  for (const auto& P : live) {
    SplitReport sp = split_at_minimal_prime(ring, P);
    if (sp.refused) {
      if (!node.refusal_witness && sp.refusal_witness)
        node.refusal_witness = sp.refusal_witness;
      continue;
    }
    node.split_e = sp.cert->e;
    node.note = "split at an idempotently generated minimal prime";
    node.children.push_back(decompose_rec(sp.comp_zero, depth + 1));
    node.children.push_back(decompose_rec(sp.comp_one, depth + 1));
    return node;
  }

  node.refused_split = true;
  node.domain = is_prime(zero_ideal(ring)).verdict;
  node.note = "several minimal primes, none idempotently generated";
  return node;
}

void collect_leaves(const RingPtr& root, const DecompNode& node,
                    const Polynomial& unit_part,
                    std::vector<DecompLeaf>& out) {
  const MonomialOrder& ord = root->order();
  if (node.leaf()) {
    DecompLeaf leaf;
    leaf.ring = node.ring;
    leaf.domain = node.domain;
    leaf.unit_part = unit_part;
    leaf.refused_split = node.refused_split;
    leaf.unresolved = node.unresolved;
    leaf.refusal_witness = node.refusal_witness;
    out.push_back(std::move(leaf));
    return;
  }
  invariant(node.children.size() == 2 && node.split_e.has_value(),
            "malformed decomposition node");
  // comp_zero kills e, so multiplication by 1-e projects onto it.
  Polynomial e = root->adopt(*node.split_e);
  Polynomial one_minus = root->reduce(sub(root->one(), e, ord));
  collect_leaves(root, node.children[0],
                 root->reduce(mul(unit_part, one_minus, ord)), out);
  collect_leaves(root, node.children[1], root->reduce(mul(unit_part, e, ord)),
                 out);
}

}  // namespace

DecompNode decompose_fully(const RingPtr& ring) {
  return decompose_rec(ring, 0);
}

std::vector<DecompLeaf> decomposition_leaves(const RingPtr& ring,
                                             const DecompNode& tree) {
  std::vector<DecompLeaf> out;
  collect_leaves(ring, tree, ring->one(), out);
  return out;
}

namespace {

// GB of the ideal of c-minors of the Jacobian together with the defining
// ideal; a unit ideal certifies smoothness (the ground fields are perfect).
IdealHandle jacobian_ideal(const RingPtr& ring, unsigned codim) {
  const auto& B = ring->defining_basis().elems;
  std::vector<std::vector<Polynomial>> jac(
      B.size(), std::vector<Polynomial>(ring->arity()));
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t v = 0; v < ring->arity(); ++v)
      jac[i][v] = derivative(B[i], v, ring->order());
  auto minors = minor_dets(jac, codim, ring->order(), ring->field(),
                           ring->id(), ring->arity(), default_exec_mode());
  auto reduced = normal_form_batch(minors, B, ring->order(),
                                   default_exec_mode());
  return IdealHandle(ring, std::move(reduced));
}

}  // namespace

DedekindReport is_dedekind_domain(const RingPtr& ring) {
  DedekindReport out;
  PrimeVerdict dv = is_prime(zero_ideal(ring));
  out.domain = dv.verdict;
  if (dv.verdict != Verdict::True) {
    out.verdict = dv.verdict == Verdict::False ? Verdict::False
                                               : Verdict::Unknown;
    out.note = dv.verdict == Verdict::False ? "not a domain (" + dv.path + ")"
                                            : "domain property undecided";
    return out;
  }
  out.dim = krull_dim(*ring);
  if (out.dim > 1) {
    out.verdict = Verdict::False;
    out.note = "Krull dimension exceeds 1";
    return out;
  }
  if (ring->defining_basis().elems.empty()) {
    out.verdict = Verdict::True;
    out.note = out.dim == 0 ? "field" : "principal ideal domain";
    return out;
  }
  // A domain presentation is equidimensional, so the Jacobian criterion
  // applies with codimension arity - dim.
  unsigned codim = static_cast<unsigned>(ring->arity()) - out.dim;
  IdealHandle jac = jacobian_ideal(ring, codim);
  if (jac.is_unit_ideal()) {
    out.verdict = Verdict::True;
    out.note = out.dim == 0 ? "smooth, zero-dimensional domain: a field"
                            : "smooth curve: regular local rings are DVRs";
    return out;
  }
  out.verdict = Verdict::False;
  out.note = "singular locus is nonempty";
  out.singular_basis = jac.basis().elems;
  return out;
}

ClassifyReport classify_noetherian_semihereditary(const RingPtr& ring) {
  ClassifyReport out;
  out.reduced = is_reduced(ring);
  if (out.reduced.verdict == Verdict::False) {
    out.verdict = Verdict::False;
    out.note = "not reduced";
    return out;
  }
  out.tree = decompose_fully(ring);
  out.leaves = decomposition_leaves(ring, out.tree);

  bool unknown = out.reduced.verdict == Verdict::Unknown;
  for (const auto& leaf : out.leaves) {
    if (leaf.refused_split) {
      // Only the explicit g not-in P^2 witness certifies the obstruction;
      // a refusal without one (undecided primality) is honest ignorance.
      if (leaf.refusal_witness) {
        out.verdict = Verdict::False;
        out.note = "a minimal prime is not idempotently generated";
        return out;
      }
      out.leaf_reports.emplace_back();
      unknown = true;
      continue;
    }
    if (leaf.unresolved) {
      DedekindReport dd;
      dd.domain = leaf.domain;
      dd.note = "minimal primes of the component were not enumerated";
      out.leaf_reports.push_back(dd);
      unknown = true;
      continue;
    }
    DedekindReport dd = is_dedekind_domain(leaf.ring);
    out.leaf_reports.push_back(dd);
    if (dd.verdict == Verdict::False) {
      out.verdict = Verdict::False;
      out.note = "a component is not a Dedekind domain";
      return out;
    }
    if (dd.verdict == Verdict::Unknown) unknown = true;
  }
  if (unknown) {
    out.verdict = Verdict::Unknown;
    out.note = "some component property is undecided";
    return out;
  }
  out.verdict = Verdict::True;
  out.note = "finite product of Dedekind domains";
  return out;
}

RegularityReport is_regular_ring(const RingPtr& ring) {
  RegularityReport out;
  out.dim = krull_dim(*ring);
  const auto& B = ring->defining_basis().elems;

  if (B.empty()) {
    out.verdict = Verdict::True;
    out.path = "zero";
    out.note = "polynomial ring";
    return out;
  }
  if (ring->defining_is_monomial()) {
    bool linear = std::all_of(B.begin(), B.end(), [](const Polynomial& e) {
      return e.leading_monomial().total_degree() == 1;
    });
    out.verdict = linear ? Verdict::True : Verdict::False;
    out.path = "monomial";
    out.note = linear ? "presentation trims to a polynomial ring"
                      : "a minimal generator of degree >= 2 is singular at "
                        "the origin";
    return out;
  }
  bool hypersurface = B.size() == 1;
  bool domain = false;
  if (!hypersurface) domain = is_prime(zero_ideal(ring)).verdict == Verdict::True;
  if (hypersurface || domain) {
    unsigned codim = static_cast<unsigned>(ring->arity()) - out.dim;
    IdealHandle jac = jacobian_ideal(ring, hypersurface ? 1 : codim);
    out.path = hypersurface ? "hypersurface" : "domain";
    if (jac.is_unit_ideal()) {
      out.verdict = Verdict::True;
      out.note = "empty singular locus";
    } else {
      out.verdict = Verdict::False;
      out.note = "singular locus is nonempty";
      out.singular_basis = jac.basis().elems;
    }
    return out;
  }
  out.path = "none";
  out.note = "no decision path applies to this presentation";
  return out;
}

FrobeniusReport frobenius_flat(const RingPtr& ring) {
  require(!ring->field().rational(),
          "Frobenius flatness needs positive characteristic");
  FrobeniusReport out;
  out.regularity = is_regular_ring(ring);
  out.flat = out.regularity.verdict;
  out.note = "flatness of Frobenius is equivalent to regularity";
  return out;
}

FPModule frobenius_pushforward(const RingPtr& ring) {
  const FieldDesc& field = ring->field();
  require(!field.rational(), "pushforward needs positive characteristic");
  const unsigned long p = field.p;
  const std::size_t n = ring->arity();
  double size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= static_cast<double>(p);
  require(size <= 128.0, "p^arity too large for the pushforward presentation");
  const std::size_t m = static_cast<std::size_t>(size);
  const MonomialOrder& ord = ring->order();

  std::vector<unsigned> box(n, static_cast<unsigned>(p - 1));
  auto basis_exps = exponent_box(box);
  invariant(basis_exps.size() == m, "basis enumeration mismatch");
  auto index_of = [&](const std::vector<unsigned>& e) {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < n; ++i) {
      idx += stride * e[i];
      stride *= p;
    }
    return idx;
  };

  std::vector<Vec> cols;
  for (const auto& f : ring->defining_basis().elems) {
    for (const auto& nu : basis_exps) {
      Polynomial fnu = mul_term(f, Coeff::one(field), Monomial{nu}, ord);
      Vec col = vec_zero(*ring, m);
      for (const auto& t : fnu.terms()) {
        std::vector<unsigned> mu(n), q(n);
        for (std::size_t i = 0; i < n; ++i) {
          mu[i] = t.m[i] % static_cast<unsigned>(p);
          q[i] = t.m[i] / static_cast<unsigned>(p);
        }
        // c * x^(p q + mu) = (c^(1/p) x^q)^p x^mu, and c^(1/p) = c over
        // the prime field.
        Polynomial piece = Polynomial::monomial(ring->id(), Monomial{q}, t.c);
        std::size_t at = index_of(mu);
        col[at] = add(col[at], piece, ord);
      }
      cols.push_back(std::move(col));
    }
  }
  return FPModule(ring, m, cols);
}

TorsionReport is_torsion_free(const FPModule& M) {
  TorsionReport core = torsion_free_core(M);
  if (core.verdict != Verdict::Unknown) return core;

  const RingPtr& A = M.ring();
  const MonomialOrder& ord = A->order();
  DecompNode tree = decompose_fully(A);
  if (tree.leaf()) return core;
  auto leaves = decomposition_leaves(A, tree);

  auto span_gb = module_buchberger(module_gens_over(A, M.cols()), ord);
  for (std::size_t li = 0; li < leaves.size(); ++li) {
    const DecompLeaf& leaf = leaves[li];
    std::vector<Vec> cols;
    for (const auto& c : M.cols()) {
      Vec v(c.size());
      for (std::size_t i = 0; i < c.size(); ++i)
        v[i] = leaf.ring->adopt(c[i]);
      cols.push_back(std::move(v));
    }
    FPModule ML(leaf.ring, M.gens(), cols);
    TorsionReport lr = torsion_free_core(ML);
    if (lr.verdict == Verdict::Unknown) {
      core.note = "undecided on a component (" + lr.note + ")";
      return core;
    }
    if (lr.verdict == Verdict::False) {
      // Lift the witness: act by it on this component, by 1 elsewhere.
      Polynomial u = leaf.unit_part;
      Polynomial aL = A->adopt(*lr.witness_a);
      Polynomial one_minus_u = A->reduce(sub(A->one(), u, ord));
      Polynomial a =
          A->reduce(add(mul(aL, u, ord), one_minus_u, ord));
      Vec mv(M.gens());
      for (std::size_t i = 0; i < M.gens(); ++i)
        mv[i] = A->reduce(mul(A->adopt((*lr.witness_m)[i]), u, ord));
      invariant(is_regular(A, a) == Verdict::True,
                "lifted witness not regular");
      invariant(!module_member(mv, span_gb, ord), "lifted element is zero");
      invariant(module_member(vec_mul(mv, a, ord), span_gb, ord),
                "lifted product misses the span");
      TorsionReport out;
      out.verdict = Verdict::False;
      out.path = "decomposition";
      out.note = "torsion on component " + std::to_string(li) + " (" +
                 lr.path + " path)";
      out.witness_a = a;
      out.witness_m = mv;
      return out;
    }
  }
  TorsionReport out;
  out.verdict = Verdict::True;
  out.path = "decomposition";
  out.note = "torsion-free on every component of the idempotent "
             "decomposition";
  return out;
}

}  // namespace ringkit
