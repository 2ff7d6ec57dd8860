#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ruled::cli {

/// Exit codes of `run`.
enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Entry point of the command-line tool. Writes exactly one JSON document to
/// `out` (or to --output) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names of all top-level subcommands.
std::vector<std::string> subcommands();

/// JSON schema text for a subcommand; empty if unknown.
std::string schema(const std::string& subcommand);

}  // namespace ruled::cli
