#pragma once

// Command-line front end. Commands run in-process and return their text so
// tests can drive them without spawning the executable.

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace multipole::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // selfcheck reported a failing check
  kDomain = 2,
  kConvergence = 3,
  kEmptyPlateau = 4,
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;  // CSV or JSON payload (empty when --out was given)
  std::string err;
};

/// Flat `key = value` configuration; `#` starts a comment. Keys are
/// normalized to use '_' (so `quad-points` and `quad_points` are the same).
/// Throws DomainError on malformed lines.
std::map<std::string, std::string> parse_config(std::string_view text);

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace multipole::cli
