#ifndef SUMDIFF_CLI_HPP
#define SUMDIFF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sumdiff {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;  // also: failed verification
inline constexpr int kExitUsage = 2;           // usage and I/O errors

/// Runs one command line; args[0] is the program name.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumdiff

#endif  // SUMDIFF_CLI_HPP
