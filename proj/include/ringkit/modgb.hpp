#pragma once

#include <optional>
#include <vector>

#include "ringkit/ring.hpp"

namespace ringkit {

// Element of a free module R^m: fixed-length coordinate vector. Components
// are sorted under the order the module computations run with.
using Vec = std::vector<Polynomial>;

bool vec_is_zero(const Vec& v);
Vec vec_zero(const RingPresentation& ring, std::size_t len);
Vec vec_unit(const RingPresentation& ring, std::size_t len, std::size_t pos);
Vec vec_add(const Vec& a, const Vec& b, const MonomialOrder& ord);
Vec vec_sub(const Vec& a, const Vec& b, const MonomialOrder& ord);
Vec vec_scale(const Vec& v, const Coeff& c);
Vec vec_mul(const Vec& v, const Polynomial& f, const MonomialOrder& ord);

struct ModTerm {
  std::size_t pos;
  Term t;
};

// Position-over-term: earlier coordinates dominate, the ring order breaks
// ties inside a coordinate. Requires components sorted under that order.
std::optional<ModTerm> vec_leading(const Vec& v);

Vec module_nf(Vec v, const std::vector<Vec>& basis, const MonomialOrder& ord);

// Reduced module GB (monic, autoreduced, canonically sorted). No pair
// criteria beyond matching leading positions: the product criterion is not
// valid for modules.
std::vector<Vec> module_buchberger(std::vector<Vec> gens,
                                   const MonomialOrder& ord);

bool module_member(const Vec& v, const std::vector<Vec>& gb,
                   const MonomialOrder& ord);
bool module_equal(const std::vector<Vec>& a, const std::vector<Vec>& b,
                  const MonomialOrder& ord);

// Generators + (defining ideal) * e_t, the preimage in R^m of the submodule
// of A^m they generate.
std::vector<Vec> module_gens_over(const RingPtr& ring, std::vector<Vec> gens);

// Column generators of the syzygy module over A = R/I0 of the given vectors:
// every returned column c satisfies sum_q c[q] * vectors[q] = 0 in A^m.
std::vector<Vec> syzygies(const RingPtr& ring, const std::vector<Vec>& vectors);

}  // namespace ringkit
