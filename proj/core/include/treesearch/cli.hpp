#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treesearch {

// Command-line front end over the file formats.  Subcommands: solve, eval,
// simulate, classify, gen, verify.  Returns the process exit code; errors go
// to `err`.  Interactive simulation reads oracle answers from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace treesearch
