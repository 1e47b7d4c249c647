#pragma once
// The wreathgap command line: irreps, spectrum, verify, corpus, generate.

#include <iosfwd>
#include <string>
#include <vector>

namespace wreathgap::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv, runs the subcommand, writes the report to out and
/// diagnostics to err. Returns the process exit code.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with args excluding the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreathgap::cli
