#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slopenorm {

/// Command-line front end. `args` excludes the program name.
/// Exit codes: 0 every check holds, 1 some check fails, 2 usage or data error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slopenorm
