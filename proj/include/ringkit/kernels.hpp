#pragma once

#include <vector>

#include "ringkit/polynomial.hpp"

namespace ringkit {

// Batch kernels run either serially or OpenMP-parallel. Both paths produce
// identical output; tests compare them and the bench target times them.
enum class ExecMode { Serial, Parallel };

ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode m);

// Normal forms of many polynomials against a fixed basis (independent items).
std::vector<Polynomial> normal_form_batch(const std::vector<Polynomial>& polys,
                                          const std::vector<Polynomial>& basis,
                                          const MonomialOrder& ord,
                                          ExecMode mode);

// Determinant over the ambient polynomial ring (fraction-free Bareiss).
Polynomial det(std::vector<std::vector<Polynomial>> m, const MonomialOrder& ord,
               const FieldDesc& field, std::uint32_t ring, std::size_t arity);

// Determinants of all s-by-s minors, row/column subsets enumerated in
// lexicographic order (rows outer). Entries live in the ambient ring.
std::vector<Polynomial> minor_dets(
    const std::vector<std::vector<Polynomial>>& m, std::size_t s,
    const MonomialOrder& ord, const FieldDesc& field, std::uint32_t ring,
    std::size_t arity, ExecMode mode);

}  // namespace ringkit
