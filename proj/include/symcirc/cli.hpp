#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symcirc::cli {

inline constexpr const char* kVersion = "0.1.0";

// args excludes the program name; returns the process exit code
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symcirc::cli
