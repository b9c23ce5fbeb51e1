#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kalliance {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitUsage = 2,
  kExitViolation = 3,
};

struct Command {
  /// gen | solve | bounds | product | bisect | verify
  std::string subcommand;
  /// Graph paths, or the generator kind followed by its parameters.
  std::vector<std::string> args;
  int k = 0;
  std::optional<int> r;
  /// a | gamma | psi | psi-gd | cut | iso | bw | mu | dom
  std::string quantity;
  bool global = false;
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
  /// text | json
  std::string format = "text";
};

/// Executes a parsed command. Reports go to `out` (or the --output file),
/// diagnostics to `err`.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// Parses argv and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kalliance
