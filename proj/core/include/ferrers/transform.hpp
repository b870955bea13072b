#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ferrers/limits.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

// Corner (row i, column j), both 1-based.
struct TransformStep {
  int i;
  int j;
  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

// Replaces the subboard {(x,y) : x >= i, y >= j} by its conjugate. (i,j) must
// be a cell of mu and the result must again be a Ferrers board; otherwise
// InvalidArgument. (1,1) gives the conjugate.
Partition ij_transform(const Partition& mu, int i, int j);

// Like ij_transform but returns nullopt instead of throwing.
std::optional<Partition> try_ij_transform(const Partition& mu, int i, int j);

// Every valid (i,j) with its result, row-major order.
std::vector<std::pair<TransformStep, Partition>> valid_transforms(const Partition& mu);

// Breadth-first search for a shortest chain of at most max_steps transforms
// taking mu to tau. nullopt means no chain within max_steps; a search that
// outgrows limits.transform_state_cap throws LimitExceeded instead.
std::optional<std::vector<TransformStep>> transform_chain(const Partition& mu, const Partition& tau,
                                                          int max_steps, const Limits& limits = {});

// Replays a chain; throws InvalidArgument if any step is invalid.
Partition apply_chain(const Partition& mu, const std::vector<TransformStep>& chain);

}  // namespace ferrers
