#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadareas::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotAttainable = 2,
  kViolations = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadareas::cli
