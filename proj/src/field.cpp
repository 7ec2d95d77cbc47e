#include "ringkit/field.hpp"

namespace ringkit {

bool modulus_is_prime(unsigned long p) {
  if (p < 2) return false;
  mpz_class n(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

void Coeff::reduce() {
  if (p_ == 0) {
    v_.canonicalize();
    return;
  }
  invariant(v_.get_den() == 1, "GF(p) value with nontrivial denominator");
  mpz_class num = v_.get_num();
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class r = num % m;
  if (r < 0) r += m;
  v_ = mpq_class(r);
}

Coeff Coeff::inv() const {
  invariant(!is_zero(), "inverse of zero");
  if (p_ == 0) return make(1 / v_);
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class out;
  int ok = mpz_invert(out.get_mpz_t(), v_.get_num().get_mpz_t(), m.get_mpz_t());
  invariant(ok != 0, "non-invertible residue mod prime");
  return make(mpq_class(out));
}

std::string Coeff::str() const { return v_.get_str(); }

}  // namespace ringkit
