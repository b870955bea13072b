#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ferrers::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kMismatch = 3;
inline constexpr int kBudget = 4;

// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ferrers::cli
