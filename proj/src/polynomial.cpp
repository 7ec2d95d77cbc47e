#include "ringkit/polynomial.hpp"

#include <algorithm>

namespace ringkit {

Polynomial Polynomial::make(std::uint32_t ring, std::size_t arity,
                            std::vector<Term> soup, const MonomialOrder& ord) {
  for (const auto& t : soup)
    require(t.m.arity() == arity, "term arity mismatch");
  std::sort(soup.begin(), soup.end(), [&](const Term& a, const Term& b) {
    return compare(a.m, b.m, ord) > 0;
  });
  Polynomial p;
  p.ring_ = ring;
  p.arity_ = arity;
  for (auto& t : soup) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = p.terms_.back().c + t.c;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.c.is_zero(); });
  return p;
}

Polynomial Polynomial::constant(std::uint32_t ring, std::size_t arity,
                                const Coeff& c) {
  Polynomial p = zero(ring, arity);
  if (!c.is_zero()) p.terms_.push_back({c, Monomial(arity)});
  return p;
}

Polynomial Polynomial::monomial(std::uint32_t ring, const Monomial& m,
                                const Coeff& c) {
  Polynomial p = zero(ring, m.arity());
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::variable(std::uint32_t ring, std::size_t arity,
                                std::size_t i, const FieldDesc& f) {
  invariant(i < arity, "variable index out of range");
  Monomial m(arity);
  m[i] = 1;
  return monomial(ring, m, Coeff::one(f));
}

namespace {

void check_pair(const Polynomial& f, const Polynomial& g) {
  require(f.ring() == g.ring(), "ring-id mismatch");
  require(f.arity() == g.arity(), "arity mismatch");
}

}  // namespace

Polynomial add(const Polynomial& f, const Polynomial& g,
               const MonomialOrder& ord) {
  check_pair(f, g);
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  std::vector<Term> out;
  out.reserve(f.terms().size() + g.terms().size());
  std::size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].m, b[j].m, ord);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Coeff s = a[i].c + b[j].c;
      if (!s.is_zero()) out.push_back({s, a[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return Polynomial::from_sorted(f.ring(), f.arity(), std::move(out));
}

Polynomial neg(const Polynomial& f) {
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.c = -t.c;
  return Polynomial::from_sorted(f.ring(), f.arity(), std::move(out));
}

Polynomial sub(const Polynomial& f, const Polynomial& g,
               const MonomialOrder& ord) {
  return add(f, neg(g), ord);
}

Polynomial scale(const Polynomial& f, const Coeff& c) {
  if (c.is_zero()) return Polynomial::zero(f.ring(), f.arity());
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.c = t.c * c;
  return Polynomial::from_sorted(f.ring(), f.arity(), std::move(out));
}

Polynomial mul_term(const Polynomial& f, const Coeff& c, const Monomial& m,
                    const MonomialOrder& ord) {
  if (c.is_zero()) return Polynomial::zero(f.ring(), f.arity());
  std::vector<Term> out = f.terms();
  for (auto& t : out) {
    t.c = t.c * c;
    t.m = t.m * m;
  }
  return Polynomial::make(f.ring(), f.arity(), std::move(out), ord);
}

Polynomial mul(const Polynomial& f, const Polynomial& g,
               const MonomialOrder& ord) {
  check_pair(f, g);
  std::vector<Term> soup;
  soup.reserve(f.terms().size() * g.terms().size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) soup.push_back({a.c * b.c, a.m * b.m});
  return Polynomial::make(f.ring(), f.arity(), std::move(soup), ord);
}

Polynomial poly_pow(const Polynomial& f, unsigned k, const MonomialOrder& ord) {
  Polynomial base = f;
  Polynomial acc;
  bool have = false;
  unsigned e = k;
  while (e > 0) {
    if (e & 1u) {
      acc = have ? mul(acc, base, ord) : base;
      have = true;
    }
    e >>= 1;
    if (e) base = mul(base, base, ord);
  }
  if (!have) {
    // f^0 = 1; the field comes from f when available, else QQ.
    FieldDesc fd = f.is_zero() ? FieldDesc{} : f.leading_coeff().field();
    return Polynomial::constant(f.ring(), f.arity(), Coeff::one(fd));
  }
  return acc;
}

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return scale(f, f.leading_coeff().inv());
}

Polynomial derivative(const Polynomial& f, std::size_t var,
                      const MonomialOrder& ord) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    unsigned e = t.m[var];
    if (e == 0) continue;
    Term d = t;
    d.c = t.c * Coeff::of(t.c.field(), static_cast<long>(e));
    d.m[var] = e - 1;
    if (!d.c.is_zero()) out.push_back(std::move(d));
  }
  return Polynomial::make(f.ring(), f.arity(), std::move(out), ord);
}

Polynomial resort(const Polynomial& f, const MonomialOrder& ord) {
  return Polynomial::make(f.ring(), f.arity(), f.terms(), ord);
}

Polynomial remap(const Polynomial& f, std::uint32_t new_ring,
                 std::size_t new_arity,
                 const std::vector<std::size_t>& index_map,
                 const MonomialOrder& new_ord) {
  require(index_map.size() == f.arity(), "remap table arity mismatch");
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(new_arity);
    for (std::size_t i = 0; i < f.arity(); ++i) {
      if (t.m[i] == 0) continue;
      require(index_map[i] < new_arity, "remap target out of range");
      m[index_map[i]] += t.m[i];
    }
    out.push_back({t.c, m});
  }
  return Polynomial::make(new_ring, new_arity, std::move(out), new_ord);
}

int poly_cmp(const Polynomial& f, const Polynomial& g,
             const MonomialOrder& ord) {
  const auto& a = f.terms();
  const auto& b = g.terms();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = compare(a[i].m, b[i].m, ord);
    if (c != 0) return c;
    c = a[i].c.cmp(b[i].c);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace ringkit
