#ifndef DERANGE_TOOLS_CLI_HPP
#define DERANGE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace derange {

/// Exit codes: 0 proved (or success), 2 probabilistic, 1 error or failed check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace derange

#endif  // DERANGE_TOOLS_CLI_HPP
