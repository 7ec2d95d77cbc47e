#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringkit/fpmodule.hpp"
#include "ringkit/ideal.hpp"

namespace ringkit {

struct ReducedReport {
  Verdict verdict = Verdict::Unknown;
  std::string path;
  std::string note;
  std::optional<Polynomial> witness;  // nilpotent: nonzero, witness^k == 0
  unsigned witness_power = 0;
};
ReducedReport is_reduced(const RingPtr& ring);

struct VnrReport {
  Verdict verdict = Verdict::Unknown;
  unsigned dim = 0;
  ReducedReport reduced;  // filled when dim == 0
  std::string note;
};
// von Neumann regular == zero-dimensional and reduced.
VnrReport is_vnr(const RingPtr& ring);

struct TqDimReport {
  Verdict known = Verdict::Unknown;
  unsigned dim = 0;
  std::string note;
};
// Krull dimension of the total quotient ring Q(A).
TqDimReport total_quotient_dim(const RingPtr& ring);

struct SplitReport {
  bool refused = false;
  std::string reason;
  std::optional<Polynomial> refusal_witness;
  PrimeVerdict prime_check;
  std::vector<std::pair<Polynomial, Verdict>> zero_divisor_checks;
  std::optional<IdempotentCert> cert;
  RingPtr comp_zero;  // A/(e): the component where e vanishes
  RingPtr comp_one;   // A/(1-e): the component where e is 1
};
// Split A at a prime of zero divisors with P^2 = P; refuses (with a
// witness generator outside P^2) when the hypotheses fail.
SplitReport split_at_minimal_prime(const RingPtr& ring, const IdealHandle& P);

struct DecompNode {
  RingPtr ring;
  Verdict domain = Verdict::Unknown;  // meaningful on leaves
  std::string note;
  bool refused_split = false;
  bool unresolved = false;  // minimal primes could not be enumerated
  std::optional<Polynomial> refusal_witness;
  std::optional<Polynomial> split_e;  // idempotent used at this node
  std::vector<DecompNode> children;   // empty or exactly two

  bool leaf() const { return children.empty(); }
};
// Repeatedly split off idempotently generated minimal primes.
DecompNode decompose_fully(const RingPtr& ring);

struct DecompLeaf {
  RingPtr ring;
  Verdict domain = Verdict::Unknown;
  Polynomial unit_part;  // idempotent of A projecting onto this component
  bool refused_split = false;
  bool unresolved = false;
  std::optional<Polynomial> refusal_witness;
};
std::vector<DecompLeaf> decomposition_leaves(const RingPtr& ring,
                                             const DecompNode& tree);

struct DedekindReport {
  Verdict verdict = Verdict::Unknown;
  Verdict domain = Verdict::Unknown;
  unsigned dim = 0;
  std::string note;
  std::vector<Polynomial> singular_basis;  // GB of the Jacobian ideal if not
                                           // a unit
};
DedekindReport is_dedekind_domain(const RingPtr& ring);

struct ClassifyReport {
  Verdict verdict = Verdict::Unknown;
  ReducedReport reduced;
  DecompNode tree;
  std::vector<DecompLeaf> leaves;
  std::vector<DedekindReport> leaf_reports;
  std::string note;
};
// Noetherian semi-hereditary == finite product of Dedekind domains
// (fields count); decided through the idempotent decomposition.
ClassifyReport classify_noetherian_semihereditary(const RingPtr& ring);

struct RegularityReport {
  Verdict verdict = Verdict::Unknown;
  unsigned dim = 0;
  std::string path;
  std::string note;
  std::vector<Polynomial> singular_basis;
};
RegularityReport is_regular_ring(const RingPtr& ring);

struct FrobeniusReport {
  Verdict flat = Verdict::Unknown;
  RegularityReport regularity;
  std::string note;
};
// Flatness of the Frobenius pushforward, decided through regularity.
FrobeniusReport frobenius_flat(const RingPtr& ring);

// F_*A as a finitely presented A-module on the p^n basis monomials;
// requires GF(p) and a small p^arity.
FPModule frobenius_pushforward(const RingPtr& ring);

// Torsion-freeness with the idempotent-decomposition fallback on top of
// the core paths.
TorsionReport is_torsion_free(const FPModule& M);

}  // namespace ringkit
