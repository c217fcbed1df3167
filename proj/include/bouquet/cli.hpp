#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bouquet::cli {

enum ExitCode { ok = 0, internal_error = 1, invalid_input = 2, tolerance_failure = 3 };

/// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

/// 64-bit FNV-1a, used to name sweep output files.
std::string fnv1a_hex(const std::string& text);

} // namespace bouquet::cli
