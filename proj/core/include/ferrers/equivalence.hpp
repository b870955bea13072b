#pragma once

#include <vector>

#include "ferrers/limits.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/series.hpp"

namespace ferrers {

// Wilf equivalence checked on weights 0..N only: wilf_series(mu, N) ==
// wilf_series(tau, N). A true result is evidence up to N, not a proof.
bool wilf_equivalent_upto(const Partition& mu, const Partition& tau, int degree_bound);

// Entry k is F_{mu,k} up to degree N, for k = 0 .. N, from one pass over the
// partitions of each weight n <= N.
std::vector<TruncatedSeries> width_series_table(const Partition& mu, int degree_bound,
                                                const Limits& limits = {});

// Same widths and enumerated F_{.,k} agreeing for every k with |mu| + k <= N.
bool width_wilf_equivalent_upto(const Partition& mu, const Partition& tau, int degree_bound,
                                const Limits& limits = {});

// Partitions of weight n grouped by rook multiset. Classes are ordered by
// their first member; members keep enumeration order.
std::vector<std::vector<Partition>> rook_classes(int n, const Limits& limits = {});

}  // namespace ferrers
