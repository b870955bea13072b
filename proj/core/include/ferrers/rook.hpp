#pragma once

#include <vector>

#include "ferrers/checked.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

// r_j = number of placements of j non-attacking rooks on the Ferrers board,
// for j = 0 up to the largest j with r_j > 0.
using RookVector = std::vector<Count>;

// Sorted multiset {mu_i + i : 1 <= i <= h}. Requires h >= h_mu.
std::vector<int> rook_multiset(const Partition& mu, int h);

// Multiset criterion evaluated at h = max(h_mu, h_tau), or h = 1 when both
// are empty.
bool rook_equivalent(const Partition& mu, const Partition& tau);

// Column DP: with columns sorted by increasing length c_1 <= ... <= c_m, the
// j-th rook placed in column t has c_t - (j-1) free cells.
RookVector rook_numbers(const Partition& mu);

}  // namespace ferrers
