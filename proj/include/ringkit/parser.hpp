#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringkit/fpmodule.hpp"
#include "ringkit/ideal.hpp"

namespace ringkit {

// One parsed declaration file: named objects in declaration order plus the
// action statements, already resolved and validated (a parse_error carries
// the line/column of the offending token).
struct Program {
  struct NamedRing {
    std::string name;
    RingPtr ring;
  };
  struct NamedIdeal {
    std::string name;
    std::string ring;
    IdealHandle handle;
  };
  struct NamedModule {
    std::string name;
    std::string ring;
    FPModule mod;
  };
  struct Statement {
    enum class Kind { Check, Split, Decompose, Classify };
    Kind kind;
    std::string property;          // check only
    std::string target;            // ring, ideal, or module name
    std::optional<std::string> at; // check ... at IDEAL / split ... at IDEAL
    int line = 0;
  };

  std::vector<NamedRing> rings;
  std::vector<NamedIdeal> ideals;
  std::vector<NamedModule> modules;
  std::vector<Statement> statements;

  const RingPtr* find_ring(const std::string& name) const;
  const NamedIdeal* find_ideal(const std::string& name) const;
  const NamedModule* find_module(const std::string& name) const;
};

// Check properties accepted by `check PROPERTY TARGET [at IDEAL];`.
const std::vector<std::string>& check_properties();

Program parse_declarations(const std::string& text);

// Parse a single polynomial in the variables of `ring` (used by tests).
Polynomial parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace ringkit
