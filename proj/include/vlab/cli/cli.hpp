#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vlab {

/// Runs one command line (without the program name). Writes JSON to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a domain error, 2 on a
/// usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vlab
