#pragma once

#include <string>
#include <vector>

namespace twc::cli {

/// Runs the command line given argv-style arguments (program name excluded).
/// Exit codes: 0 success, 1 usage/configuration, 2 input, 3 numerical or
/// capacity failure.
int run(const std::vector<std::string>& args);

} // namespace twc::cli
