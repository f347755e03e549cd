#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quivernc::cli {

enum ExitCode : int {
  exit_pass = 0,
  exit_verification_failure = 1,
  exit_usage = 2,
  exit_cap_or_type = 3,
};

/// Runs one command. args excludes the program name. Data documents go to
/// out; diagnostics and wall times go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivernc::cli
