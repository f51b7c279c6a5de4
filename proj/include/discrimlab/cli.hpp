#pragma once

#include "discrimlab/io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace discrimlab::cli {

/// Exit codes: 0 affirmative result, 1 well-formed negative result, 2 error.
enum ExitCode : int { kAffirmative = 0, kNegative = 1, kError = 2 };

struct Report {
    std::string command;
    io::Json inputs;
    io::Json result;
    int exit_code = kError;
};

/// Runs one command line (without the program name). The JSON result goes
/// to `out`, or to the --out path when given; a one-line summary goes to
/// `err`. Never throws.
Report run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace discrimlab::cli
