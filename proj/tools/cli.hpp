#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kFinding = 2;  // failed fact claim, certification mismatch
inline constexpr int kUsage = 64;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and statistics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turan::cli
