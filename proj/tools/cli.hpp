#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fockqha::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (program name excluded). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockqha::cli
