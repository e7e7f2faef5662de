#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indseq {

// Exit codes of the indseq command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // I/O or unexpected error
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitPrecondition = 4;

// Runs `indseq <args...>` (args excludes the program name). Data goes to
// `out` (or the --output file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace indseq
