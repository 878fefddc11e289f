#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secluded::cli {

/// Runs the command line `args` (program name first). Returns the exit code:
/// 0 on success, 2 on bad input files or arguments, 3 when a size cap is hit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secluded::cli
