#include "ringkit/printer.hpp"

namespace ringkit {

std::string monomial_str(const Monomial& m, const RingPresentation& ring) {
  std::string out;
  for (std::size_t v = 0; v < m.arity(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.vars()[v];
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

std::string poly_str(const Polynomial& f, const RingPresentation& ring) {
  if (f.is_zero()) return "0";
  Polynomial g = resort(f, ring.order());
  std::string out;
  bool first = true;
  for (const auto& t : g.terms()) {
    Coeff c = t.c;
    bool neg = c.field().rational() && c.cmp(Coeff::zero(c.field())) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (neg) c = -c;
    std::string mono = monomial_str(t.m, ring);
    if (mono.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
  }
  return out;
}

std::string ideal_str(const IdealHandle& I) {
  std::string out = "(";
  bool first = true;
  for (const auto& g : I.gens()) {
    if (!first) out += ", ";
    first = false;
    out += poly_str(g, *I.ring());
  }
  return out + ")";
}

std::string monprime_str(const MonPrime& p, const RingPresentation& ring) {
  std::string out = "(";
  bool first = true;
  for (std::size_t v : p.vars) {
    if (!first) out += ", ";
    first = false;
    out += ring.vars()[v];
  }
  return out + ")";
}

std::string ring_str(const RingPresentation& ring) {
  std::string out = ring.field().str() + "[";
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (i) out += ", ";
    out += ring.vars()[i];
  }
  out += "]";
  if (!ring.defining().empty()) {
    out += " / (";
    for (std::size_t i = 0; i < ring.defining().size(); ++i) {
      if (i) out += ", ";
      out += poly_str(ring.defining()[i], ring);
    }
    out += ")";
  }
  if (ring.local()) out += " local";
  return out;
}

std::string vec_str(const Vec& v, const RingPresentation& ring) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += poly_str(v[i], ring);
  }
  return out + "]";
}

}  // namespace ringkit
