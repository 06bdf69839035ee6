#pragma once

#include <ostream>
#include <span>
#include <string>

namespace homdil::cli {

/// Runs one invocation; returns the process exit code.
///   0  every check in the invocation passed
///   1  a check failed (invalid dilation, FAIL entry in a report)
///   2  usage or input error
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace homdil::cli
