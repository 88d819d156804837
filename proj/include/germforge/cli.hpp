#pragma once

#include <map>
#include <string>

namespace germforge::cli {

/// One command line, already split. `flags` holds only what was given, keyed
/// without the leading dashes ("seeds", "theta-mode", "assume-reduced").
struct Invocation {
  std::string command;
  std::string input;
  std::map<std::string, std::string> flags;
  /// value of GERMFORGE_SEED, if set
  std::string env_seeds;
};

struct Outcome {
  /// serialized result document, newline terminated
  std::string document;
  /// 0 success, 2 precondition or usage errors, 3 genericity or assumption
  /// failures, 1 internal errors
  int exit_code = 0;
};

Outcome run(const Invocation& inv);

/// Error document for failures before a command runs (bad flags).
Outcome usage_error(const std::string& command, const std::string& message);

const char* const commands[] = {"codim",         "tangent", "theta",  "primitive", "versal-check",
                                "versal-build",  "determinacy", "locus", "classify", "morse",
                                "split",         "conserve", "hilbert", "jet-dump"};

}  // namespace germforge::cli
