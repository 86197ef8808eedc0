#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace pmc::cli {

enum ExitCode : int { ok = 0, failed = 1, bad_arguments = 2, numerical_error = 3 };

// Parses "name=value" into the map; throws InvalidArgument on malformed input.
void parse_assignment(const std::string& text, std::map<std::string, double>& out);

// Runs the command line; writes normal output to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pmc::cli
