#include "ringkit/kernels.hpp"

#include <atomic>

#include "ringkit/groebner.hpp"
#include "ringkit/util.hpp"

namespace ringkit {

namespace {
std::atomic<ExecMode> g_mode{ExecMode::Parallel};
}

ExecMode default_exec_mode() { return g_mode.load(); }
void set_default_exec_mode(ExecMode m) { g_mode.store(m); }

std::vector<Polynomial> normal_form_batch(const std::vector<Polynomial>& polys,
                                          const std::vector<Polynomial>& basis,
                                          const MonomialOrder& ord,
                                          ExecMode mode) {
  std::vector<Polynomial> out(polys.size());
#pragma omp parallel for schedule(dynamic) if (mode == ExecMode::Parallel)
  for (std::size_t i = 0; i < polys.size(); ++i)
    out[i] = normal_form(polys[i], basis, ord);
  return out;
}

Polynomial det(std::vector<std::vector<Polynomial>> m, const MonomialOrder& ord,
               const FieldDesc& field, std::uint32_t ring, std::size_t arity) {
  const std::size_t n = m.size();
  Polynomial one = Polynomial::constant(ring, arity, Coeff::one(field));
  if (n == 0) return one;
  for (const auto& row : m)
    invariant(row.size() == n, "determinant of non-square matrix");
  if (n == 1) return m[0][0];

  // Fraction-free Bareiss elimination; divisions are exact over the
  // polynomial ring.
  bool negate = false;
  Polynomial prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return Polynomial::zero(ring, arity);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial t =
            sub(mul(m[i][j], m[k][k], ord), mul(m[i][k], m[k][j], ord), ord);
        m[i][j] = exact_div(t, prev, ord);
      }
      m[i][k] = Polynomial::zero(ring, arity);
    }
    prev = m[k][k];
  }
  Polynomial d = m[n - 1][n - 1];
  return negate ? neg(d) : d;
}

std::vector<Polynomial> minor_dets(
    const std::vector<std::vector<Polynomial>>& m, std::size_t s,
    const MonomialOrder& ord, const FieldDesc& field, std::uint32_t ring,
    std::size_t arity, ExecMode mode) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  if (s == 0) return {Polynomial::constant(ring, arity, Coeff::one(field))};
  if (s > rows || s > cols) return {};

  auto rsets = combinations(rows, s);
  auto csets = combinations(cols, s);
  std::vector<Polynomial> out(rsets.size() * csets.size());
#pragma omp parallel for schedule(dynamic) if (mode == ExecMode::Parallel)
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const auto& rs = rsets[idx / csets.size()];
    const auto& cs = csets[idx % csets.size()];
    std::vector<std::vector<Polynomial>> sub(s, std::vector<Polynomial>(s));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) sub[i][j] = m[rs[i]][cs[j]];
    out[idx] = det(std::move(sub), ord, field, ring, arity);
  }
  return out;
}

}  // namespace ringkit
