#include "ringkit/ring.hpp"

#include <atomic>
#include <set>

namespace ringkit {

namespace {
std::atomic<std::uint32_t> g_next_ring_id{1};
}

RingPtr RingPresentation::make(std::vector<std::string> vars, FieldDesc field,
                               std::vector<Polynomial> defining, bool local,
                               MonomialOrder ord) {
  if (!field.rational())
    require(modulus_is_prime(field.p),
            "modulus " + std::to_string(field.p) + " is not prime");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    require(!v.empty(), "empty variable name");
    require(seen.insert(v).second, "duplicate variable " + v);
  }

  auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
  ring->id_ = g_next_ring_id.fetch_add(1);
  ring->vars_ = std::move(vars);
  ring->field_ = field;
  ring->local_ = local;
  ring->order_ = std::move(ord);

  std::vector<std::size_t> ident(ring->arity());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  for (auto& f : defining) {
    require(f.arity() == ring->arity(), "defining generator arity mismatch");
    Polynomial g = remap(f, ring->id_, ring->arity(), ident, ring->order_);
    if (!g.is_zero()) ring->defining_.push_back(std::move(g));
  }

  ring->basis_ = buchberger(ring->defining_, ring->order_);
  require(!ring->basis_.is_unit_ideal(),
          "1 lies in the defining ideal (zero ring)");
  return ring;
}

Polynomial RingPresentation::adopt(const Polynomial& f) const {
  require(f.arity() == arity(), "arity mismatch");
  if (f.ring() == id_) return f;
  std::vector<std::size_t> ident(arity());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  return remap(f, id_, arity(), ident, order_);
}

Polynomial RingPresentation::reduce(const Polynomial& f) const {
  require(f.ring() == id_, "ring-id mismatch");
  return nf(f, basis_);
}

bool RingPresentation::defining_is_monomial() const {
  for (const auto& g : basis_.elems)
    if (!g.is_term()) return false;
  return true;
}

std::vector<Monomial> standard_monomials(const RingPresentation& ring,
                                         unsigned maxdeg) {
  std::vector<Monomial> level{Monomial(ring.arity())};
  std::vector<Monomial> out;
  auto in_lt_ideal = [&](const Monomial& m) {
    for (const auto& g : ring.defining_basis().elems)
      if (g.leading_monomial().divides(m)) return true;
    return false;
  };
  std::set<std::vector<unsigned>> seen;
  for (unsigned d = 0; d <= maxdeg; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : level) {
      if (seen.count(m.exps()) || in_lt_ideal(m)) continue;
      seen.insert(m.exps());
      out.push_back(m);
      for (std::size_t i = 0; i < ring.arity(); ++i) {
        Monomial up = m;
        up[i] += 1;
        if (up.total_degree() <= maxdeg) next.push_back(up);
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace ringkit
