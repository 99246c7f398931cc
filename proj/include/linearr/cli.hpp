#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linearr/geometry.hpp"

namespace linearr {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 2,
  kExitUsage = 64,
  kExitDataError = 65,
};

/// Corpus name, then "family:value", then a file path.
Arrangement resolve_arrangement(const std::string& ref, std::ostream& warnings);

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linearr
