#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quinfield {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command line (args[0] is the program name). Exit codes: 0 success,
/// 1 ambiguous or indeterminate, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quinfield
