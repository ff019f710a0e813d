#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bottcoh {

/// Entry point of the `bottcoh` tool. `args` excludes the program name.
/// Returns 0 on success / criterion met / clean scan, 1 when a criterion is
/// not met or a scan finds violations, and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bottcoh
