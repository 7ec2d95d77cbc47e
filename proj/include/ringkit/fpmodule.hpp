#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringkit/ideal.hpp"
#include "ringkit/modgb.hpp"

namespace ringkit {

// Finitely presented module coker(Phi): A^gens / (columns of Phi). Entries
// are stored reduced; zero and duplicate columns are dropped.
class FPModule {
 public:
  FPModule(RingPtr ring, std::size_t gens, std::vector<Vec> cols);
  static FPModule free_module(RingPtr ring, std::size_t gens);

  const RingPtr& ring() const { return ring_; }
  std::size_t gens() const { return gens_; }
  const std::vector<Vec>& cols() const { return cols_; }
  const Polynomial& entry(std::size_t gen, std::size_t col) const {
    return cols_[col][gen];
  }

 private:
  RingPtr ring_;
  std::size_t gens_ = 0;
  std::vector<Vec> cols_;
};

// Annihilator of the element of M with the given coordinate vector.
IdealHandle ann_element(const FPModule& M, const Vec& coords);

// f regular in A iff (0 : f) = 0; exact for every presentation.
Verdict is_regular(const RingPtr& ring, const Polynomial& f);

// Associated primes of A (their union is the zero-divisor set); exact when
// the defining ideal is monomial.
struct ZeroDivisorProfile {
  bool monomial = false;
  std::vector<MonPrime> ass;
};
ZeroDivisorProfile zero_divisors_profile(const RingPtr& ring);

struct TorsionReport {
  Verdict verdict = Verdict::Unknown;
  std::string path;
  std::string note;
  std::optional<Polynomial> witness_a;  // regular element
  std::optional<Vec> witness_m;         // nonzero element it kills
};

// Decision paths: zero/free module, direct sums of monomial cyclics,
// modules over a domain. The idempotent-decomposition fallback sits in the
// ring-structure layer.
TorsionReport torsion_free_core(const FPModule& M);

struct LocalizedTorsionReport {
  Verdict verdict = Verdict::Unknown;
  bool ill_posed = false;  // the given ideal is not prime
  std::string path;
  std::string note;
  std::optional<Polynomial> witness_a;
  std::optional<Vec> witness_m;
};
LocalizedTorsionReport torsion_free_localized(const FPModule& M,
                                              const IdealHandle& P);

IdealHandle fitting_ideal(const FPModule& M, std::size_t r);
std::vector<IdealHandle> fitting_chain(const FPModule& M);  // r = 0..gens

struct FlatReport {
  Verdict verdict = Verdict::Unknown;
  std::optional<std::size_t> offending_r;
  std::optional<Polynomial> offending_witness;  // in Fitt_r, not in Fitt_r^2
  std::vector<IdempotentCert> certs;            // one per index when flat
  std::size_t simplified_gens = 0;
};
// Finitely presented flat == projective == every Fitting ideal is
// idempotently generated; certificates carry the extracted idempotents.
FlatReport is_flat_fp(const FPModule& M);

// Remove generators matched by relations with constant pivots (cokernel
// unchanged up to isomorphism; Fitting ideals are presentation-invariant).
FPModule simplify_presentation(const FPModule& M);

}  // namespace ringkit
