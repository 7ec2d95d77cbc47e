#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringkit/groebner.hpp"
#include "ringkit/ring.hpp"
#include "ringkit/verdict.hpp"

namespace ringkit {

// An ideal of a quotient ring A = R/I0, stored as preimage generators in R.
// Unlike ring presentations, handles may be the unit ideal.
class IdealHandle {
 public:
  IdealHandle() = default;
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  // Reduced GB of gens + defining ideal, in the ring's order. Memoized.
  const GroebnerBasis& basis() const;

  bool contains(const Polynomial& f) const;
  bool is_zero_ideal() const;   // equal to I0, i.e. (0) in A
  bool is_unit_ideal() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  struct Memo;
  mutable std::shared_ptr<Memo> memo_;
};

IdealHandle zero_ideal(RingPtr ring);
IdealHandle unit_ideal(RingPtr ring);

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);
bool ideal_subset(const IdealHandle& a, const IdealHandle& b);

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b);
IdealHandle colon(const IdealHandle& a, const Polynomial& g);
IdealHandle colon(const IdealHandle& a, const IdealHandle& b);

struct SaturationResult {
  IdealHandle ideal;
  unsigned steps = 0;  // colon iterations until stable
};
SaturationResult saturate(const IdealHandle& a, const IdealHandle& b);
SaturationResult saturate(const IdealHandle& a, const Polynomial& g);

// f in rad(I)?  Decided exactly (auxiliary-variable trick).
bool radical_member(const Polynomial& f, const IdealHandle& I);

// Krull dimension via independent variable sets modulo leading terms.
unsigned krull_dim(const RingPresentation& ring);
unsigned krull_dim(const IdealHandle& I);  // dim of A/I

// A prime of the form (x_i : i in vars) + I0; vars sorted ascending.
struct MonPrime {
  std::vector<std::size_t> vars;
  bool operator==(const MonPrime&) const = default;
};
bool monprime_subset(const MonPrime& a, const MonPrime& b);
// Membership f in P + I0 for monomial I0; f must already be ring-reduced.
bool monprime_contains(const MonPrime& p, const Polynomial& f_reduced);
IdealHandle monprime_handle(const RingPtr& ring, const MonPrime& p);

// Require I + I0 monomial. Deterministic order: by (size, lex).
std::vector<MonPrime> monomial_minimal_primes(const IdealHandle& I);
std::vector<MonPrime> monomial_associated_primes(const IdealHandle& I);
// Same, with the monomial w realizing P = (I : w) attached.
std::vector<std::pair<MonPrime, Monomial>> monomial_associated_primes_witnessed(
    const IdealHandle& I);

struct PrimeVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string path;  // which decision rule applied
  std::string note;
  // For a False verdict: either a product witness a*b in I with a,b not in I,
  // or a nilpotent witness (a only, with a^k in I).
  std::optional<Polynomial> witness_a;
  std::optional<Polynomial> witness_b;
};
PrimeVerdict is_prime(const IdealHandle& I);

// Distinct monic irreducible factors of f, or nullopt outside the supported
// shapes (monomial content, univariate degree <= 3, quadratic in one
// variable with univariate discriminant, char != 2 for the latter).
std::optional<std::vector<Polynomial>> distinct_irreducible_factors(
    const Polynomial& f, const RingPresentation& ring);

// Radical of a zero-dimensional ideal (adds squarefree parts of the
// univariate eliminants to the generators).
IdealHandle radical_zero_dim(const IdealHandle& I);

struct ElimResult {
  RingPtr subring;               // polynomial ring on the kept variables
  IdealHandle ideal;             // image ideal
  std::vector<std::size_t> kept; // old indices of the kept variables
};
ElimResult eliminate(const IdealHandle& I, const std::vector<std::size_t>& keep);

// gcd/lcm in the ambient polynomial ring (via a principal intersection).
Polynomial ring_gcd(const Polynomial& f, const Polynomial& g,
                    const RingPresentation& ring);

// Monic product of the distinct irreducible factors of f (any number of
// variables, any characteristic).
Polynomial poly_radical(const Polynomial& f, const RingPresentation& ring);

// Univariate helpers; inputs must be supported on a single variable.
Polynomial uni_gcd(Polynomial a, Polynomial b, const MonomialOrder& ord);
Polynomial uni_radical(const Polynomial& f, const RingPresentation& ring);

// Certificate that an idempotently generated ideal J (J^2 = J) is principal
// and generated by the idempotent e: residues holds NF witnesses that were
// checked zero (e^2 - e, and e - g_i cofactor combos).
struct IdempotentCert {
  Polynomial e;  // the idempotent with J = (e)
  Polynomial a;  // intermediate: det(Id - m) - 1, (1+a)J = 0 in A
  Polynomial b;  // lift with a = a^2 b in A
  std::vector<std::pair<std::string, Polynomial>> residues;
};
IdempotentCert idempotent_from_idem_ideal(const IdealHandle& J);

namespace detail {
// Scratch polynomial ring: same variables plus one fresh auxiliary variable,
// no defining ideal.
RingPtr scratch_extension(const RingPresentation& ring);
// Map f into the scratch extension (identity on old variables).
Polynomial promote(const Polynomial& f, const RingPtr& ext);
// GB elimination of masked variables: returns basis elements free of them,
// still tagged with the input ring id.
std::vector<Polynomial> eliminate_raw(const std::vector<Polynomial>& gens,
                                      const std::vector<char>& elim_mask,
                                      const RingPresentation& ring);
// Generators of (gens_a) cap (gens_b) in the ambient polynomial ring.
std::vector<Polynomial> intersect_raw(const std::vector<Polynomial>& a,
                                      const std::vector<Polynomial>& b,
                                      const RingPresentation& ring);
}  // namespace detail

}  // namespace ringkit
