#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tilebeta {

/// Command-line front end. Returns the process exit code: 0 on success,
/// 2 on input validation errors (with a structured diagnostic on err),
/// 1 on internal invariant violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tilebeta
