#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdb {

/// Runs the zdbkit command line. `args` excludes the program name.
/// Exit codes: 0 success or certified, 1 verification/condition failure,
/// 2 usage error or malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdb
