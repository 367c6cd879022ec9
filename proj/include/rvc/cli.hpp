#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rvc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kTheoremViolation = 3,
};

/// Runs one command line (without the program name). JSON or CSV goes to
/// `out` only on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rvc::cli
