#pragma once

#include <string>
#include <vector>

namespace ringkit {

// One ringcheck invocation with captured output; main() prints and exits.
// Exit codes: 0 success, 1 ill-formed input, 2 broken internal invariant.
struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run_command(const std::vector<std::string>& args);

}  // namespace ringkit
