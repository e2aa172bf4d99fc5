#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posmon::cli {

/// Runs one invocation; args excludes the program name. Returns the process
/// exit status: 0 success, 1 domain error, 2 usage or parse error. Nothing is
/// written to `out` unless the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posmon::cli
