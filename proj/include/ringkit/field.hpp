#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ringkit/errors.hpp"

namespace ringkit {

// Coefficient field descriptor: QQ when p == 0, GF(p) for prime p.
struct FieldDesc {
  unsigned long p = 0;

  bool rational() const { return p == 0; }
  bool operator==(const FieldDesc&) const = default;

  std::string str() const {
    return rational() ? "QQ" : "GF(" + std::to_string(p) + ")";
  }
};

bool modulus_is_prime(unsigned long p);

// Field element. Rationals are kept canonical (reduced, positive denominator)
// by mpq_class; GF(p) values are integer residues in [0, p).
class Coeff {
 public:
  Coeff() : p_(0), v_(0) {}

  static Coeff zero(const FieldDesc& f) { return Coeff(f, 0); }
  static Coeff one(const FieldDesc& f) { return Coeff(f, 1); }
  static Coeff of(const FieldDesc& f, long n) { return Coeff(f, mpq_class(n)); }
  static Coeff of(const FieldDesc& f, const mpq_class& q) { return Coeff(f, q); }

  const FieldDesc& field() const { return field_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Coeff operator+(const Coeff& o) const { same(o); return make(v_ + o.v_); }
  Coeff operator-(const Coeff& o) const { same(o); return make(v_ - o.v_); }
  Coeff operator*(const Coeff& o) const { same(o); return make(v_ * o.v_); }
  Coeff operator-() const { return make(-v_); }

  Coeff inv() const;
  Coeff operator/(const Coeff& o) const { return *this * o.inv(); }

  bool operator==(const Coeff& o) const { return v_ == o.v_; }
  bool operator!=(const Coeff& o) const { return v_ != o.v_; }

  // Total order used only for canonical sorting and printing decisions.
  int cmp(const Coeff& o) const { return ::cmp(v_, o.v_); }

  const mpq_class& value() const { return v_; }
  std::string str() const;

 private:
  Coeff(const FieldDesc& f, const mpq_class& q) : field_(f), p_(f.p), v_(q) {
    reduce();
  }
  Coeff make(const mpq_class& q) const { return Coeff(field_, q); }
  void same(const Coeff& o) const {
    invariant(field_ == o.field_, "coefficients from different fields");
  }
  void reduce();

  FieldDesc field_;
  unsigned long p_;
  mpq_class v_;
};

}  // namespace ringkit
