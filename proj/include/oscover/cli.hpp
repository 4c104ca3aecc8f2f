#pragma once

#include <string>
#include <vector>

#include "oscover/json_io.hpp"

namespace oscover {

struct Diagnostic {
  enum class Severity { info, error } severity = Severity::error;
  std::string message;
};

struct CommandResult {
  enum class Status { ok, domain_error, usage_error, inconsistency } status = Status::ok;
  Json payload;
  std::vector<Diagnostic> diagnostics;

  int exit_code() const;
};

/// Dispatch one subcommand (check-cover, build-family, enumerate,
/// intersect, genus, verify-paper). args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

/// Full CLI entry point: runs, prints payload to stdout and diagnostics
/// to stderr, returns the exit code.
int run_main(int argc, char** argv);

}  // namespace oscover
