#pragma once

// Command-line front end.  Parsing and execution live behind this function
// so tests can drive the tool in-process.
//
// Exit codes: 0 success, 1 a verification reported failures, 2 usage or
// parse errors (including module precondition violations).

#include <iosfwd>
#include <string>
#include <vector>

namespace tw::cli {

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
        std::istream& in);

} // namespace tw::cli
