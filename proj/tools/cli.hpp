#ifndef MOUFANG_TOOLS_CLI_HPP_
#define MOUFANG_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace moufang::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). A file argument of "-"
// reads `in`.
int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace moufang::cli

#endif  // MOUFANG_TOOLS_CLI_HPP_
