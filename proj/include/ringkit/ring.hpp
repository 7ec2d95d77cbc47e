#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringkit/groebner.hpp"

namespace ringkit {

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

// Finitely presented ring k[x_1..x_n]/I, with k = QQ or GF(p). The reduced
// GB of the defining ideal is computed at construction, which also rejects
// presentations of the zero ring. `local` marks the ring as localized at the
// maximal ideal generated by the variables.
class RingPresentation {
 public:
  static RingPtr make(std::vector<std::string> vars, FieldDesc field,
                      std::vector<Polynomial> defining, bool local = false,
                      MonomialOrder ord = MonomialOrder::grevlex());

  std::uint32_t id() const { return id_; }
  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const FieldDesc& field() const { return field_; }
  bool local() const { return local_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& defining() const { return defining_; }
  const GroebnerBasis& defining_basis() const { return basis_; }

  std::optional<std::size_t> var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  Polynomial zero() const { return Polynomial::zero(id_, arity()); }
  Polynomial one() const {
    return Polynomial::constant(id_, arity(), Coeff::one(field_));
  }
  Polynomial constant(long n) const {
    return Polynomial::constant(id_, arity(), Coeff::of(field_, n));
  }
  Polynomial var(std::size_t i) const {
    return Polynomial::variable(id_, arity(), i, field_);
  }

  // Adopt a polynomial with matching arity into this ring's tag space.
  Polynomial adopt(const Polynomial& f) const;

  // Canonical representative of f modulo the defining ideal.
  Polynomial reduce(const Polynomial& f) const;

  bool is_polynomial_ring() const { return basis_.elems.empty(); }
  // All defining GB elements are monomials.
  bool defining_is_monomial() const;

 private:
  RingPresentation() = default;

  std::uint32_t id_ = 0;
  std::vector<std::string> vars_;
  FieldDesc field_;
  bool local_ = false;
  MonomialOrder order_;
  std::vector<Polynomial> defining_;
  GroebnerBasis basis_;
};

// Monomials of degree <= maxdeg outside the leading-term ideal of the
// defining basis (a k-basis of the quotient in low degrees).
std::vector<Monomial> standard_monomials(const RingPresentation& ring,
                                         unsigned maxdeg);

}  // namespace ringkit
