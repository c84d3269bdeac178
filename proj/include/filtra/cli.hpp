#ifndef FILTRA_CLI_HPP
#define FILTRA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace filtra {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace filtra

#endif  // FILTRA_CLI_HPP
