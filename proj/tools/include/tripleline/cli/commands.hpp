#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tripleline/cli/config.hpp"

namespace tripleline::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// What a command produced: the machine-readable document (JSON or CSV text)
/// and a human-readable summary.
struct CommandResult {
  int exit_code = kExitOk;
  std::string document;
  std::string summary;
};

CommandResult cmd_expand(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_knots(const RunConfig& cfg);
CommandResult cmd_diagrams(const RunConfig& cfg);

/// Full command line without the program name. With `--out -` the document
/// goes to `out` and the summary to `err`; with a file path the document is
/// written there and the summary goes to `out`. Returns the exit code:
/// 0 success, 1 verification failure, 2 usage or resource-limit error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tripleline::cli
