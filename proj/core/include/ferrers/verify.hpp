#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ferrers/limits.hpp"

namespace ferrers::verify {

struct Config {
  std::uint64_t seed = 1;
  Limits limits{};
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  std::string detail;  // first failing case, or a short summary on success
  std::chrono::duration<double> elapsed{};
};

// Suites group the checks by module: core, gf, staircases, profiles,
// equivalence. "all" runs every check in criterion order.
const std::vector<std::string>& suite_names();
std::vector<int> suite_criteria(std::string_view suite);

CheckResult run_criterion(int criterion, const Config& config = {});
std::vector<CheckResult> run_suite(std::string_view suite, const Config& config = {});

// Individual checks, numbered as in the acceptance list.
CheckResult gf_closed_vs_enumerated(const Config& config);    // 1
CheckResult gf_h_independence(const Config& config);          // 2
CheckResult containment_oracle(const Config& config);         // 3
CheckResult rook_implies_wilf(const Config& config);          // 4
CheckResult width_wilf_three_way(const Config& config);       // 5
CheckResult only_staircases_survive(const Config& config);    // 6
CheckResult staircase_bijections(const Config& config);       // 7
CheckResult closure_profile_join(const Config& config);       // 8
CheckResult rook_oracles(const Config& config);               // 9
CheckResult bipartite_identity(const Config& config);         // 10

}  // namespace ferrers::verify
