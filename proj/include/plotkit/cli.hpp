#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plotkit {

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;            // success, or the property holds
inline constexpr int kExitInputError = 1;    // unreadable, malformed or invalid input
inline constexpr int kExitFalse = 2;         // the property fails; a witness is printed
inline constexpr int kExitInconclusive = 3;  // search bound reached without a verdict

// args excludes the program name. Reports go to `out` as JSON, one-line
// summaries and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plotkit
