#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnelim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitForbidden = 4;

/// Runs one subcommand. `args` excludes the program name. Everything meant for
/// stdout is written to `out` in a single write, after the command succeeds.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a of the input text, as 16 hex digits.
std::string fingerprint(const std::string& text);

}  // namespace bnelim::cli
