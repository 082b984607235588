#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace opacity {

/// Runs the command line `args` (program name excluded).
/// Exit codes: 0 holds / yes, 1 fails / no, 2 usage or input error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opacity
