#ifndef ELLROOK_CLI_RUN_CLI_HPP_
#define ELLROOK_CLI_RUN_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ellrook::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Entry point shared by the executable and the tests. args excludes the
// program name. Documents go to out, diagnostics and summaries to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellrook::cli

#endif  // ELLROOK_CLI_RUN_CLI_HPP_
