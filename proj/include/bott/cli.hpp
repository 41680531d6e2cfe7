#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bott {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { exit_ok = 0, exit_domain_error = 1, exit_verification_failure = 2 };

/// Runs the tool with args (excluding the program name). Standard input is
/// read from in when a matrix path is "-".
int run_cli(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace bott
