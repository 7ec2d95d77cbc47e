#pragma once

#include <stdexcept>
#include <string>

namespace ringkit {

// Base for everything thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ill-formed input: parse errors, arity mismatches, bad moduli, operating on
// objects from different rings. CLI maps these to exit code 1.
struct input_error : error {
  using error::error;
};

struct parse_error : input_error {
  int line;
  int column;
  parse_error(int line_, int col_, const std::string& what_)
      : input_error("line " + std::to_string(line_) + ", col " +
                    std::to_string(col_) + ": " + what_),
        line(line_),
        column(col_) {}
};

// Broken internal invariant (a bug, not bad input). CLI maps these to exit 2.
struct internal_error : error {
  using error::error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

inline void invariant(bool cond, const std::string& msg) {
  if (!cond) throw internal_error("invariant violated: " + msg);
}

}  // namespace ringkit
