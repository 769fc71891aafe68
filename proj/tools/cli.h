#ifndef SPARSEFW_TOOLS_CLI_H_
#define SPARSEFW_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsefw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the `sparsefw` command line. args[0] is the program name. Normal
// output goes to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sparsefw::cli

#endif  // SPARSEFW_TOOLS_CLI_H_
