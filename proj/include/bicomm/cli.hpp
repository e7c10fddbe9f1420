#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bicomm::cli {

/// Exit statuses of dispatch.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInput = 3;

/// Runs one subcommand; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicomm::cli
