#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ringkit/errors.hpp"

namespace ringkit {

// Exponent vector of fixed arity. The zero vector is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : e_(arity, 0u) {}
  explicit Monomial(std::vector<unsigned> e) : e_(std::move(e)) {}

  std::size_t arity() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& exps() const { return e_; }

  unsigned total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0u);
  }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](unsigned v) { return v == 0; });
  }

  bool divides(const Monomial& m) const {
    check(m);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& m) const {
    check(m);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && m.e_[i] > 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    check(m);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
    return r;
  }

  // Exact quotient; requires m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    check(m);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      invariant(r.e_[i] >= m.e_[i], "inexact monomial division");
      r.e_[i] -= m.e_[i];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i)
      r.e_[i] = std::max(r.e_[i], b.e_[i]);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check(b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i)
      r.e_[i] = std::min(r.e_[i], b.e_[i]);
    return r;
  }

  std::vector<unsigned> support() const {
    std::vector<unsigned> s;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0) s.push_back(static_cast<unsigned>(i));
    return s;
  }

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return e_ != m.e_; }

 private:
  void check(const Monomial& m) const {
    require(e_.size() == m.e_.size(), "monomial arity mismatch");
  }
  std::vector<unsigned> e_;
};

// Term order. `block` compares grevlex on the marked variables first, then
// grevlex on the rest; marking the eliminated variables makes it an
// elimination order for them.
struct MonomialOrder {
  enum class Kind { Lex, Grevlex, Block };
  Kind kind = Kind::Grevlex;
  std::vector<char> first_block;  // Block only: 1 = variable in leading block

  static MonomialOrder lex() { return {Kind::Lex, {}}; }
  static MonomialOrder grevlex() { return {Kind::Grevlex, {}}; }
  static MonomialOrder block(std::vector<char> mask) {
    return {Kind::Block, std::move(mask)};
  }
  // First `split` variables form the eliminated block.
  static MonomialOrder elimination(std::size_t arity, std::size_t split) {
    std::vector<char> m(arity, 0);
    for (std::size_t i = 0; i < split && i < arity; ++i) m[i] = 1;
    return block(std::move(m));
  }

  bool operator==(const MonomialOrder&) const = default;
};

// Returns -1, 0, +1 for a < b, a == b, a > b.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

inline bool greater(const Monomial& a, const Monomial& b,
                    const MonomialOrder& ord) {
  return compare(a, b, ord) > 0;
}

}  // namespace ringkit
