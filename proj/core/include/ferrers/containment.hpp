#pragma once

#include "ferrers/limits.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

// True iff mu is obtained from sigma by deleting some rows and some columns.
//
// Polynomial-time criterion: sigma contains mu iff there are rows
// r_1 < ... < r_h (h = height of mu) with sigma_{r_i} >= mu_i whose offsets
// sigma_{r_i} - mu_i are weakly decreasing. The offsets are the number of
// deleted columns to the left of each kept row's end, so they must be
// monotone. Rows are picked greedily top-down.
bool contains(const Partition& sigma, const Partition& mu);

// Reference search over all subsets of kept columns. Throws LimitExceeded
// when the width of sigma exceeds limits.oracle_max_width.
bool contains_oracle(const Partition& sigma, const Partition& mu, const Limits& limits = {});

// Row deletion only: the parts of mu form a sub-multiset of the parts of sigma.
bool contains_rows_only(const Partition& sigma, const Partition& mu);

// sigma is in Q(beta): the parts of beta plus any number of extra parts <= w_beta.
bool q_membership(const Partition& sigma, const Partition& beta);

}  // namespace ferrers
