#ifndef HRR_CLI_CLI_HPP
#define HRR_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hrr::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_rank_deficient = 2;
inline constexpr int exit_usage = 64;

// Runs the hrr command line on args (without the program name). Results go
// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrr::cli

#endif  // HRR_CLI_CLI_HPP
