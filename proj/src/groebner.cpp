#include "ringkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ringkit {

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& basis,
                      const MonomialOrder& ord) {
  DivisionResult res;
  res.quotients.assign(basis.size(), Polynomial::zero(f.ring(), f.arity()));
  std::vector<Term> rem;
  // The dividend may be sorted under a different order than the basis.
  Polynomial cur = resort(f, ord);
  while (!cur.is_zero()) {
    const Term& lt = cur.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Polynomial& g = basis[i];
      if (g.is_zero()) continue;
      if (!g.leading_monomial().divides(lt.m)) continue;
      Coeff c = lt.c / g.leading_coeff();
      Monomial m = lt.m / g.leading_monomial();
      cur = sub(cur, mul_term(g, c, m, ord), ord);
      res.quotients[i] =
          add(res.quotients[i], Polynomial::monomial(f.ring(), m, c), ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      cur = Polynomial::from_sorted(
          cur.ring(), cur.arity(),
          std::vector<Term>(cur.terms().begin() + 1, cur.terms().end()));
    }
  }
  res.remainder = Polynomial::from_sorted(f.ring(), f.arity(), std::move(rem));
  return res;
}

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
  return divide(f, basis, ord).remainder;
}

namespace {

struct WorkPoly {
  Polynomial p;
  std::vector<Polynomial> rep;  // over the original inputs
};

// Fully reduce w against the current basis, updating the representation.
void reduce_work(WorkPoly& w, const std::vector<WorkPoly>& basis,
                 const MonomialOrder& ord, bool with_reps) {
  std::vector<Term> rem;
  while (!w.p.is_zero()) {
    const Term& lt = w.p.leading_term();
    bool hit = false;
    for (const auto& g : basis) {
      if (g.p.is_zero()) continue;
      if (!g.p.leading_monomial().divides(lt.m)) continue;
      Coeff c = lt.c / g.p.leading_coeff();
      Monomial m = lt.m / g.p.leading_monomial();
      w.p = sub(w.p, mul_term(g.p, c, m, ord), ord);
      if (with_reps)
        for (std::size_t j = 0; j < w.rep.size(); ++j)
          w.rep[j] = sub(w.rep[j], mul_term(g.rep[j], c, m, ord), ord);
      hit = true;
      break;
    }
    if (!hit) {
      rem.push_back(lt);
      w.p = Polynomial::from_sorted(
          w.p.ring(), w.p.arity(),
          std::vector<Term>(w.p.terms().begin() + 1, w.p.terms().end()));
    }
  }
  w.p = Polynomial::from_sorted(w.p.ring(), w.p.arity(), std::move(rem));
}

void make_monic(WorkPoly& w, bool with_reps) {
  if (w.p.is_zero()) return;
  Coeff inv = w.p.leading_coeff().inv();
  w.p = scale(w.p, inv);
  if (with_reps)
    for (auto& r : w.rep) r = scale(r, inv);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned deg;
};

// Normal strategy key: lcm degree, then lex on the lcm, then indices.
bool pair_less(const Pair& a, const Pair& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  int c = compare(a.lcm, b.lcm, MonomialOrder::lex());
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord, ExecMode mode,
                         bool with_reps) {
  GroebnerBasis out;
  out.order = ord;
  out.inputs = gens;
  out.has_reps = with_reps;

  std::uint32_t ring = gens.empty() ? 0 : gens[0].ring();
  std::size_t arity = gens.empty() ? 0 : gens[0].arity();
  for (const auto& g : gens) {
    require(g.ring() == ring && g.arity() == arity,
            "generators from different rings");
  }

  std::vector<WorkPoly> G;
  auto unit_rep = [&](std::size_t idx) {
    std::vector<Polynomial> rep;
    if (!with_reps) return rep;
    rep.assign(gens.size(), Polynomial::zero(ring, arity));
    FieldDesc f = gens[idx].leading_coeff().field();
    rep[idx] = Polynomial::constant(ring, arity, Coeff::one(f));
    return rep;
  };

  std::vector<Pair> queue;
  // done[(i,j)] marks processed or criterion-skipped pairs (chain criterion).
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto push_pairs = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i) {
      Monomial l =
          Monomial::lcm(G[i].p.leading_monomial(), G[t].p.leading_monomial());
      queue.push_back({i, t, l, l.total_degree()});
    }
  };

  for (std::size_t idx = 0; idx < gens.size(); ++idx) {
    if (gens[idx].is_zero()) continue;
    // Inputs may arrive sorted under a different order.
    WorkPoly w{resort(gens[idx], ord), unit_rep(idx)};
    // Reducing inputs up front keeps the working set small.
    reduce_work(w, G, ord, with_reps);
    if (w.p.is_zero()) continue;
    make_monic(w, with_reps);
    G.push_back(std::move(w));
    push_pairs(G.size() - 1);
  }

  auto mark_done = [&](const Pair& p) { done.insert({p.i, p.j}); };
  auto is_done = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return done.count({i, j}) > 0;
  };
  auto skip_by_criteria = [&](const Pair& p) {
    const Monomial& mi = G[p.i].p.leading_monomial();
    const Monomial& mj = G[p.j].p.leading_monomial();
    if (mi.coprime(mj)) return true;  // product criterion
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (k == p.i || k == p.j || G[k].p.is_zero()) continue;
      if (G[k].p.leading_monomial().divides(p.lcm) && is_done(p.i, k) &&
          is_done(p.j, k))
        return true;  // chain criterion
    }
    return false;
  };
  auto spoly = [&](const Pair& p) {
    const auto& gi = G[p.i];
    const auto& gj = G[p.j];
    Monomial mi = p.lcm / gi.p.leading_monomial();
    Monomial mj = p.lcm / gj.p.leading_monomial();
    FieldDesc f = gi.p.leading_coeff().field();
    Coeff one = Coeff::one(f);
    WorkPoly w;
    w.p = sub(mul_term(gi.p, one, mi, ord), mul_term(gj.p, one, mj, ord), ord);
    if (with_reps) {
      w.rep.assign(gens.size(), Polynomial::zero(ring, arity));
      for (std::size_t t = 0; t < gens.size(); ++t)
        w.rep[t] = sub(mul_term(gi.rep[t], one, mi, ord),
                       mul_term(gj.rep[t], one, mj, ord), ord);
    }
    return w;
  };

  while (!queue.empty()) {
    std::sort(queue.begin(), queue.end(), pair_less);
    // One round: every queued pair at the minimal lcm degree.
    unsigned d = queue.front().deg;
    std::size_t take = 0;
    if (mode == ExecMode::Parallel) {
      while (take < queue.size() && queue[take].deg == d) ++take;
    } else {
      take = 1;
    }
    std::vector<Pair> batch(queue.begin(), queue.begin() + take);
    queue.erase(queue.begin(), queue.begin() + take);

    std::vector<WorkPoly> results(batch.size());
    std::vector<char> live(batch.size(), 0);
    for (std::size_t b = 0; b < batch.size(); ++b) {
      if (skip_by_criteria(batch[b])) continue;
      live[b] = 1;
      results[b] = spoly(batch[b]);
    }
#pragma omp parallel for schedule(dynamic) if (mode == ExecMode::Parallel)
    for (std::size_t b = 0; b < batch.size(); ++b) {
      if (live[b]) reduce_work(results[b], G, ord, with_reps);
    }
    for (std::size_t b = 0; b < batch.size(); ++b) {
      mark_done(batch[b]);
      if (!live[b]) continue;
      WorkPoly& w = results[b];
      // Catch up on anything inserted earlier in this round so every
      // insertion strictly grows the leading-term ideal.
      reduce_work(w, G, ord, with_reps);
      if (w.p.is_zero()) continue;
      make_monic(w, with_reps);
      G.push_back(std::move(w));
      push_pairs(G.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<std::size_t> order_idx(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    int c = compare(G[a].p.leading_monomial(), G[b].p.leading_monomial(), ord);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<WorkPoly> minimal;
  for (std::size_t idx : order_idx) {
    bool covered = false;
    for (const auto& h : minimal) {
      if (h.p.leading_monomial().divides(G[idx].p.leading_monomial())) {
        covered = true;
        break;
      }
    }
    if (!covered) minimal.push_back(G[idx]);
  }

  // Tail-reduce each element against the others. The reduced GB is unique,
  // so per-element reduction against the fixed minimal set is order-free.
  std::vector<WorkPoly> reduced(minimal.size());
#pragma omp parallel for schedule(dynamic) if (mode == ExecMode::Parallel)
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<WorkPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    WorkPoly w = minimal[i];
    reduce_work(w, others, ord, with_reps);
    make_monic(w, with_reps);
    reduced[i] = std::move(w);
  }

  for (auto& w : reduced) {
    invariant(!w.p.is_zero(), "autoreduction killed a minimal GB element");
    out.elems.push_back(w.p);
    if (with_reps) out.reps.push_back(w.rep);
  }
  return out;
}

std::vector<Polynomial> cofactors_over_inputs(const Polynomial& f,
                                              const GroebnerBasis& gb) {
  invariant(gb.has_reps, "cofactors need a representation-tracking basis");
  DivisionResult d = divide(f, gb.elems, gb.order);
  std::vector<Polynomial> cof(gb.inputs.size(),
                              Polynomial::zero(f.ring(), f.arity()));
  for (std::size_t k = 0; k < gb.elems.size(); ++k) {
    if (d.quotients[k].is_zero()) continue;
    for (std::size_t j = 0; j < gb.inputs.size(); ++j) {
      if (gb.reps[k][j].is_zero()) continue;
      cof[j] = add(cof[j], mul(d.quotients[k], gb.reps[k][j], gb.order),
                   gb.order);
    }
  }
  return cof;
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g,
                     const MonomialOrder& ord) {
  require(!g.is_zero(), "division by zero polynomial");
  DivisionResult d = divide(f, {g}, ord);
  invariant(d.remainder.is_zero(), "inexact polynomial division");
  return d.quotients[0];
}

}  // namespace ringkit
