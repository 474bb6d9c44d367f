#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trinom::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 success, 2 invalid parameters or parse errors,
/// 3 a size cap was exceeded, 1 unexpected internal failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trinom::cli
