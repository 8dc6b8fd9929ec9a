#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circrt::cli {

/// Process exit statuses shared by every subcommand.
enum Exit : int {
  holds = 0,     // claim holds / witness found
  fails = 1,     // claim fails / refuted
  usage = 2,     // bad flags, malformed input, unmet preconditions, I/O errors
  exhausted = 3, // node budget exhausted
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace circrt::cli
