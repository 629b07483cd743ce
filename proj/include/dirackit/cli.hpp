#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dirackit {

// Full command-line surface. `args` excludes the program name. Returns the
// process exit code: 0 success, 1 selfcheck failure, 2 validation, 3
// singular evaluation point, 4 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirackit
