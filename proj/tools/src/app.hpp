#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdmsusy::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Parses `args` (args[0] is the program name), runs the command and writes
/// the report. Nothing is written to --output unless the command completes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdmsusy::cli
