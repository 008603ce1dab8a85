#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yb::cli {

enum ExitCode : int {
  kPass = 0,
  kVerdictFalse = 1,
  kInputError = 2,
  kInfeasible = 3,
};

/// Runs one ybgate invocation. args excludes the program name. Input paths
/// of "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace yb::cli
