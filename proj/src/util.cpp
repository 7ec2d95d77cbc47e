#include "ringkit/util.hpp"

namespace ringkit {

std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                   std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<std::vector<unsigned>> exponent_box(
    const std::vector<unsigned>& box) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(box.size(), 0);
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < box.size() && e[i] == box[i]) {
      e[i] = 0;
      ++i;
    }
    if (i == box.size()) break;
    ++e[i];
  }
  return out;
}

std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto cs = combinations(n, k);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

}  // namespace ringkit
