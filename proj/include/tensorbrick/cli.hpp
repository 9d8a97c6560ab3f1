#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tensorbrick {

// Exit codes: 0 definite result, 2 inconclusive or incomplete, 1 usage or input error.
inline constexpr int kExitDefinite = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

// Runs the command line tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensorbrick
