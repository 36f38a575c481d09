#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superlie::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_not_generated = 1,
  exit_input_error = 2,
  exit_internal_error = 3,
};

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace superlie::cli
