#pragma once

#include <cstdint>
#include <vector>

#include "ringkit/field.hpp"
#include "ringkit/monomial.hpp"

namespace ringkit {

struct Term {
  Coeff c;
  Monomial m;
};

// Element of the ambient polynomial ring of one presentation. Terms are kept
// strictly descending with respect to the order given at construction time;
// all callers that mix polynomials re-normalize through the same order.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(std::uint32_t ring, std::size_t arity) {
    Polynomial p;
    p.ring_ = ring;
    p.arity_ = arity;
    return p;
  }

  static Polynomial make(std::uint32_t ring, std::size_t arity,
                         std::vector<Term> soup, const MonomialOrder& ord);

  // Trusts the caller: terms already sorted descending, combined, no zeros.
  static Polynomial from_sorted(std::uint32_t ring, std::size_t arity,
                                std::vector<Term> terms) {
    Polynomial p;
    p.ring_ = ring;
    p.arity_ = arity;
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(std::uint32_t ring, std::size_t arity,
                             const Coeff& c);
  static Polynomial monomial(std::uint32_t ring, const Monomial& m,
                             const Coeff& c);
  // x_i as a polynomial.
  static Polynomial variable(std::uint32_t ring, std::size_t arity,
                             std::size_t i, const FieldDesc& f);

  std::uint32_t ring() const { return ring_; }
  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    invariant(!terms_.empty(), "leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().m; }
  const Coeff& leading_coeff() const { return leading_term().c; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
    return d;
  }

  bool is_term() const { return terms_.size() == 1; }
  bool is_monomial() const { return is_term() && terms_[0].c.is_one(); }
  bool is_constant() const {
    return terms_.empty() || (is_term() && terms_[0].m.is_one());
  }

  bool operator==(const Polynomial& o) const {
    if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
        return false;
    }
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  std::uint32_t ring_ = 0;
  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

// Arithmetic; operands must share a ring id. Results come back normalized
// under `ord`.
Polynomial add(const Polynomial& f, const Polynomial& g,
               const MonomialOrder& ord);
Polynomial sub(const Polynomial& f, const Polynomial& g,
               const MonomialOrder& ord);
Polynomial mul(const Polynomial& f, const Polynomial& g,
               const MonomialOrder& ord);
Polynomial neg(const Polynomial& f);
Polynomial scale(const Polynomial& f, const Coeff& c);
// f * c*m
Polynomial mul_term(const Polynomial& f, const Coeff& c, const Monomial& m,
                    const MonomialOrder& ord);
Polynomial poly_pow(const Polynomial& f, unsigned k, const MonomialOrder& ord);
Polynomial monic(const Polynomial& f);
Polynomial derivative(const Polynomial& f, std::size_t var,
                      const MonomialOrder& ord);

// Same terms, re-sorted under a different order.
Polynomial resort(const Polynomial& f, const MonomialOrder& ord);

// Re-tag into another ring's ambient variables; index_map[i] is the new
// position of old variable i.
Polynomial remap(const Polynomial& f, std::uint32_t new_ring,
                 std::size_t new_arity, const std::vector<std::size_t>& index_map,
                 const MonomialOrder& new_ord);

// Total order for canonical sorting of polynomial lists (not algebraic).
int poly_cmp(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

}  // namespace ringkit
