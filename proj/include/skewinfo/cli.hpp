#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewinfo::cli {

enum ExitCode : int {
  kOk = 0,
  kIoOrParse = 1,
  kValidation = 2,
  kRelationFailed = 3,
};

// args excludes the program name. Output goes to `out`, diagnostics and the
// search summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewinfo::cli
