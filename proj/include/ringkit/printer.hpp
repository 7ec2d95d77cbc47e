#pragma once

#include <string>
#include <vector>

#include "ringkit/ideal.hpp"
#include "ringkit/modgb.hpp"

namespace ringkit {

// Declaration-language output; parse_poly(poly_str(f)) == f.
std::string poly_str(const Polynomial& f, const RingPresentation& ring);

std::string monomial_str(const Monomial& m, const RingPresentation& ring);
std::string ideal_str(const IdealHandle& I);
std::string monprime_str(const MonPrime& p, const RingPresentation& ring);
std::string ring_str(const RingPresentation& ring);
std::string vec_str(const Vec& v, const RingPresentation& ring);

}  // namespace ringkit
