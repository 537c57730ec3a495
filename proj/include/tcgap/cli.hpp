#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcgap::cli {

// Command-line driver behind the tcgap binary, exposed so tests can run
// subcommands in-process. `args` excludes the program name. Exit codes:
// 0 success, 1 argument or I/O error, 2 a verification found a violation.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace tcgap::cli
