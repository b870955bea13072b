#pragma once

#include <span>

#include "ferrers/partition.hpp"
#include "ferrers/profile.hpp"
#include "ferrers/profile_class.hpp"
#include "ferrers/staircase.hpp"

namespace ferrers {

// sigma(C, p_1, ..., p_l): given one chosen entry per maximal overlapping
// segment, the partition whose profile is pi(M_1,p_1) u ... u pi(M_l,p_l),
// where pi(M,p) keeps (p,I), trims the right end of every larger-valued
// entry of M with more than one index, trims the left end of every
// smaller-valued one, and drops the remaining singletons. Its neighbours in
// G(C) are exactly the chosen entries.
Partition sigma_selector(const Staircase& s, std::span<const ProfileEntry> choices);

// Same for a class; throws InvalidArgument when pr(C) is not a staircase.
Partition sigma_selector(const ClassRep& rep, std::span<const ProfileEntry> choices);

// One sigma_selector result per choice tuple: a family realizing s.
std::vector<Partition> realize_staircase(const Staircase& s);

}  // namespace ferrers
