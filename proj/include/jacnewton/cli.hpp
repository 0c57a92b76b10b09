// Command-line front end.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacnewton::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { ok = 0, internal_error = 1, input_error = 2, property_failure = 3 };

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacnewton::cli
