#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ferrers/limits.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

// alpha *_i beta = (alpha_1, ..., alpha_i, beta_{i+1}, ...). Defined only when
// alpha_i > beta_{i+1} (strictly); otherwise throws SpliceUndefined.
Partition splice(const Partition& alpha, std::size_t i, const Partition& beta);

// Least splice-closed superset of the family, sorted and deduplicated.
// Throws InvalidArgument on an empty family and LimitExceeded past
// limits.closure_cap members.
std::vector<Partition> closure(std::span<const Partition> family, const Limits& limits = {});

// Partwise-multiplicity maximum.
Partition vee(const Partition& alpha, const Partition& beta);

// join_P(mu) = (mu + alpha_1) v ... v (mu + alpha_s). P must be nonempty.
Partition join(std::span<const Partition> family, const Partition& mu);

// The mu used to separate gamma from a family whose profile misses one of
// gamma's intervals: (4K)^{a-1} (2K)^{len} where [a,b] is gamma's p-interval,
// K = max_width and len = b - a + 1. For p = 0 the infinite interval is cut
// off at max_height + 1. Returns the empty partition when p > 0 is not a part.
Partition separating_witness(const Partition& gamma, int p, int max_width, int max_height);

}  // namespace ferrers
