#ifndef MOMCERT_TOOLS_CLI_HPP
#define MOMCERT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace momcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one command line. args excludes the program name. JSON goes to
/// `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace momcert::cli

#endif  // MOMCERT_TOOLS_CLI_HPP
