#pragma once

#include <cstddef>
#include <vector>

namespace ringkit {

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                   std::size_t k);

// All exponent vectors e with 0 <= e[i] <= box[i], odometer order.
std::vector<std::vector<unsigned>> exponent_box(const std::vector<unsigned>& box);

// All subsets of {0..n-1} ordered by (size, lexicographic).
std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t n);

}  // namespace ringkit
