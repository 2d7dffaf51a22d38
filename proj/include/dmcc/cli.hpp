#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dmcc::cli {

enum ExitCode : int {
  kOk = 0,
  kFindings = 1,  // validation reported errors
  kUsage = 2,     // bad arguments, unparsable input, or a request the data cannot answer
  kIo = 3,
};

// Runs one dmcc command. `args` excludes the program name. Data goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmcc::cli
