#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mb {

// Command-line front end.  Returns the process exit code:
//   0 success, 1 usage or input error, 2 budget exceeded, 3 internal error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mb
