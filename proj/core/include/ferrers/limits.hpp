#pragma once

#include <cstddef>

namespace ferrers {

// Work caps shared by the exhaustive routines. Exceeding any of them throws
// LimitExceeded.
struct Limits {
  int max_enumeration_weight = 64;       // partitions_of(n), count_containing
  int oracle_max_width = 16;             // contains_oracle scans 2^width column sets
  std::size_t closure_cap = 1'000'000;   // partitions generated by closure()
  std::size_t class_ground_cap = 20;     // |P(h,k)| for class_reps / inclusion-exclusion
  std::size_t member_store_cap = 1u << 16;  // subsets kept verbatim by class_reps
  std::size_t minimal_sets_cap = 20;     // side size searched by minimal_sets
  std::size_t transform_state_cap = 1'000'000;  // BFS visited set in transform_chain
};

}  // namespace ferrers
