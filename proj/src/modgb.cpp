#include "ringkit/modgb.hpp"

#include <algorithm>
#include <set>

namespace ringkit {

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

Vec vec_zero(const RingPresentation& ring, std::size_t len) {
  return Vec(len, ring.zero());
}

Vec vec_unit(const RingPresentation& ring, std::size_t len, std::size_t pos) {
  Vec v = vec_zero(ring, len);
  v[pos] = ring.one();
  return v;
}

Vec vec_add(const Vec& a, const Vec& b, const MonomialOrder& ord) {
  invariant(a.size() == b.size(), "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i], ord);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b, const MonomialOrder& ord) {
  invariant(a.size() == b.size(), "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i], ord);
  return r;
}

Vec vec_scale(const Vec& v, const Coeff& c) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = scale(v[i], c);
  return r;
}

Vec vec_mul(const Vec& v, const Polynomial& f, const MonomialOrder& ord) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = mul(v[i], f, ord);
  return r;
}

std::optional<ModTerm> vec_leading(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return ModTerm{i, v[i].leading_term()};
  return std::nullopt;
}

namespace {

Vec vec_mul_term(const Vec& v, const Coeff& c, const Monomial& m,
                 const MonomialOrder& ord) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = mul_term(v[i], c, m, ord);
  return r;
}

Vec vec_monic(Vec v) {
  auto lt = vec_leading(v);
  if (!lt) return v;
  Coeff inv = lt->t.c.inv();
  for (auto& p : v) p = scale(p, inv);
  return v;
}

// POT comparison of leading terms; "none" sorts last.
int modterm_cmp(const std::optional<ModTerm>& a, const std::optional<ModTerm>& b,
                const MonomialOrder& ord) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  if (a->pos != b->pos) return a->pos < b->pos ? 1 : -1;
  return compare(a->t.m, b->t.m, ord);
}

}  // namespace

Vec module_nf(Vec v, const std::vector<Vec>& basis, const MonomialOrder& ord) {
  if (basis.empty()) return v;
  std::size_t len = v.size();
  std::vector<std::vector<Term>> rem(len);
  while (true) {
    auto lt = vec_leading(v);
    if (!lt) break;
    bool reduced = false;
    for (const auto& g : basis) {
      auto glt = vec_leading(g);
      if (!glt || glt->pos != lt->pos) continue;
      if (!glt->t.m.divides(lt->t.m)) continue;
      Coeff c = lt->t.c / glt->t.c;
      Monomial m = lt->t.m / glt->t.m;
      v = vec_sub(v, vec_mul_term(g, c, m, ord), ord);
      reduced = true;
      break;
    }
    if (reduced) continue;
    rem[lt->pos].push_back(lt->t);
    const auto& ts = v[lt->pos].terms();
    v[lt->pos] = Polynomial::from_sorted(v[lt->pos].ring(), v[lt->pos].arity(),
                                         std::vector<Term>(ts.begin() + 1,
                                                           ts.end()));
  }
  for (std::size_t i = 0; i < len; ++i)
    v[i] = Polynomial::from_sorted(v[i].ring(), v[i].arity(),
                                   std::move(rem[i]));
  return v;
}

std::vector<Vec> module_buchberger(std::vector<Vec> gens,
                                   const MonomialOrder& ord) {
  std::vector<Vec> G;
  struct Pair {
    std::size_t i, j, pos;
    Monomial lcm;
    unsigned deg;
  };
  std::vector<Pair> queue;
  auto push_pairs = [&](std::size_t t) {
    auto lt = vec_leading(G[t]);
    for (std::size_t i = 0; i < t; ++i) {
      auto li = vec_leading(G[i]);
      if (!li || li->pos != lt->pos) continue;
      Monomial l = Monomial::lcm(li->t.m, lt->t.m);
      queue.push_back({i, t, lt->pos, l, l.total_degree()});
    }
  };

  for (auto& v : gens) {
    Vec w = module_nf(std::move(v), G, ord);
    if (vec_is_zero(w)) continue;
    G.push_back(vec_monic(std::move(w)));
    push_pairs(G.size() - 1);
  }

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.pos != b.pos) return a.pos < b.pos;
    int c = compare(a.lcm, b.lcm, MonomialOrder::lex());
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  while (!queue.empty()) {
    std::sort(queue.begin(), queue.end(), pair_less);
    Pair p = queue.front();
    queue.erase(queue.begin());
    auto li = vec_leading(G[p.i]);
    auto lj = vec_leading(G[p.j]);
    Vec s = vec_sub(
        vec_mul_term(G[p.i], Coeff::one(li->t.c.field()), p.lcm / li->t.m, ord),
        vec_mul_term(G[p.j], Coeff::one(lj->t.c.field()), p.lcm / lj->t.m, ord),
        ord);
    Vec r = module_nf(std::move(s), G, ord);
    if (vec_is_zero(r)) continue;
    G.push_back(vec_monic(std::move(r)));
    push_pairs(G.size() - 1);
  }

  // Minimalize: drop vectors whose leading term is divisible by another's.
  std::vector<Vec> minimal;
  std::vector<char> keep(G.size(), 1);
  for (std::size_t i = 0; i < G.size(); ++i) {
    auto li = vec_leading(G[i]);
    for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      auto lj = vec_leading(G[j]);
      if (lj->pos == li->pos && lj->t.m.divides(li->t.m) &&
          !(li->t.m == lj->t.m && j > i))
        keep[i] = 0;
    }
  }
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) minimal.push_back(G[i]);

  // Full autoreduction.
  std::vector<Vec> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Vec w = module_nf(minimal[i], others, ord);
    invariant(!vec_is_zero(w), "minimal module basis element reduced to zero");
    reduced.push_back(vec_monic(std::move(w)));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Vec& a, const Vec& b) {
    return modterm_cmp(vec_leading(a), vec_leading(b), ord) < 0;
  });
  return reduced;
}

bool module_member(const Vec& v, const std::vector<Vec>& gb,
                   const MonomialOrder& ord) {
  return vec_is_zero(module_nf(v, gb, ord));
}

bool module_equal(const std::vector<Vec>& a, const std::vector<Vec>& b,
                  const MonomialOrder& ord) {
  auto ga = module_buchberger(a, ord);
  auto gb = module_buchberger(b, ord);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gb[i]) return false;
  return true;
}

std::vector<Vec> module_gens_over(const RingPtr& ring, std::vector<Vec> gens) {
  if (gens.empty()) return gens;
  std::size_t m = gens[0].size();
  for (const auto& d : ring->defining_basis().elems)
    for (std::size_t t = 0; t < m; ++t) {
      Vec v = vec_zero(*ring, m);
      v[t] = d;
      gens.push_back(std::move(v));
    }
  return gens;
}

std::vector<Vec> syzygies(const RingPtr& ring, const std::vector<Vec>& vectors) {
  require(!vectors.empty(), "syzygies of an empty list");
  const MonomialOrder& ord = ring->order();
  const std::size_t m = vectors[0].size();
  const std::size_t k = vectors.size();
  for (const auto& v : vectors)
    require(v.size() == m, "syzygy input vectors of mixed length");
  const auto& dgb = ring->defining_basis().elems;
  const std::size_t total = m + k + dgb.size() * m;

  std::vector<Vec> big;
  for (std::size_t q = 0; q < k; ++q) {
    Vec w = vec_zero(*ring, total);
    for (std::size_t t = 0; t < m; ++t) w[t] = ring->reduce(vectors[q][t]);
    w[m + q] = ring->one();
    big.push_back(std::move(w));
  }
  for (std::size_t j = 0; j < dgb.size(); ++j)
    for (std::size_t t = 0; t < m; ++t) {
      Vec w = vec_zero(*ring, total);
      w[t] = dgb[j];
      w[m + k + j * m + t] = ring->one();
      big.push_back(std::move(w));
    }

  auto gb = module_buchberger(big, ord);
  std::vector<Vec> cols;
  for (const auto& w : gb) {
    bool in_graph = false;
    for (std::size_t t = 0; t < m; ++t)
      if (!w[t].is_zero()) {
        in_graph = true;
        break;
      }
    if (in_graph) continue;
    Vec col(k);
    bool nonzero = false;
    for (std::size_t q = 0; q < k; ++q) {
      col[q] = ring->reduce(w[m + q]);
      if (!col[q].is_zero()) nonzero = true;
    }
    if (!nonzero) continue;
    if (std::find(cols.begin(), cols.end(), col) == cols.end())
      cols.push_back(std::move(col));
  }

  for (const auto& col : cols) {
    for (std::size_t t = 0; t < m; ++t) {
      Polynomial acc = ring->zero();
      for (std::size_t q = 0; q < k; ++q)
        acc = add(acc, mul(col[q], vectors[q][t], ord), ord);
      invariant(ring->reduce(acc).is_zero(), "syzygy column fails to cancel");
    }
  }
  return cols;
}

}  // namespace ringkit
