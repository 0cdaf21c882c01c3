#ifndef BARENBLATT_TOOLS_CLI_HPP
#define BARENBLATT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace barenblatt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace barenblatt::cli

#endif // BARENBLATT_TOOLS_CLI_HPP
