#pragma once

#include <string>

namespace ringkit {

// Three-valued answer used by every decision procedure that has honest
// "don't know" cases. Unknown must never be collapsed to false.
enum class Verdict { True, False, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "unknown";
  }
}

inline Verdict verdict_and(Verdict a, Verdict b) {
  if (a == Verdict::False || b == Verdict::False) return Verdict::False;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::True;
}

}  // namespace ringkit
