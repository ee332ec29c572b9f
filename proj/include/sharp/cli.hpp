#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sharp::cli {

/// Exit codes: 0 success, 1 `check order` found A ≰# B, 2 malformed input,
/// 3 precondition violation (with {"error": code} on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sharp::cli
