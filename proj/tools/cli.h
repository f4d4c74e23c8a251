#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace umpf::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace umpf::cli
