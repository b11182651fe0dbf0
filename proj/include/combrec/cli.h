#ifndef COMBREC_CLI_H_
#define COMBREC_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace combrec {

// Exit codes.
inline constexpr int kExitOk = 0;        // comb / valid / done
inline constexpr int kExitNegative = 1;  // not a comb / violations
inline constexpr int kExitInput = 2;     // bad flags or malformed input

// Runs the command line `args` (args[0] is the program name) against the given
// streams and returns the exit code.
int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

// FNV-1a, 64-bit.
std::uint64_t Fnv1a64(std::string_view bytes);

}  // namespace combrec

#endif  // COMBREC_CLI_H_
