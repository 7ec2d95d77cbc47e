#pragma once

#include <optional>
#include <vector>

#include "ringkit/kernels.hpp"
#include "ringkit/polynomial.hpp"

namespace ringkit {

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // aligned with the divisor list
};

// Multivariate division; divisors tried in stored order, so the result is
// deterministic for any basis and canonical when the basis is a GB.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& basis,
                      const MonomialOrder& ord);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord);

// Reduced Groebner basis: monic, autoreduced, sorted ascending by leading
// monomial. `reps` (when tracked) writes each element over the input
// generators: elems[i] == sum_j reps[i][j] * inputs[j].
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elems;
  std::vector<Polynomial> inputs;
  std::vector<std::vector<Polynomial>> reps;
  bool has_reps = false;

  bool is_unit_ideal() const {
    return elems.size() == 1 && elems[0].is_constant() && !elems[0].is_zero();
  }
  bool is_zero_ideal() const { return elems.empty(); }
};

// Buchberger with the coprime-lcm and chain criteria, normal selection
// strategy (minimal lcm degree, ties by lex comparison of the lcm monomials).
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord,
                         ExecMode mode = default_exec_mode(),
                         bool with_reps = false);

inline Polynomial nf(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.elems, gb.order);
}

inline bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
  return nf(f, gb).is_zero();
}

// Writes f - nf(f, gb) over the original generators; requires with_reps.
std::vector<Polynomial> cofactors_over_inputs(const Polynomial& f,
                                              const GroebnerBasis& gb);

// Exact quotient f / g; throws internal_error if g does not divide f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g,
                     const MonomialOrder& ord);

}  // namespace ringkit
