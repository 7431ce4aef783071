#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pbwchar/series.hpp"

namespace pbwchar::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& method_names();

/// Evaluates one character method. Throws UsageError for unknown methods and
/// for level-1-only methods at other levels.
Series3 compute_character(const std::string& method, int level, int q_max);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbwchar::cli
