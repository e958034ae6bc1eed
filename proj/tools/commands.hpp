#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsemi::cli {

// Parses and runs one invocation; `args` excludes the program name. Reports
// go to `out` as JSON, errors to `err` as one "error (<code>): ..." line.
// Exit codes: 0 success, 1 input or validation problems, 2 violated
// preconditions, 3 a certified conclusion failed to hold.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lsemi::cli
