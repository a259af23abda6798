#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catgal::cli {

/// Batch command-line surface.  Returns the process exit code: 0 when every
/// check passes, 1 on check failures, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catgal::cli
