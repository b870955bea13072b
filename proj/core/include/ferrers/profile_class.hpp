#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ferrers/checked.hpp"
#include "ferrers/limits.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/profile.hpp"

namespace ferrers {

// One profile class C: the splice closure cl(C), which is also the union of
// all members, and the common profile pr(C).
struct ClassRep {
  std::vector<Partition> ground;   // P(h,k), or the family the class was built from
  std::vector<Partition> closure;  // cl(C), sorted
  Profile profile;                 // pr(C)
};

// Builds the representative of the class containing `family`.
ClassRep make_class_rep(std::span<const Partition> family, const Limits& limits = {});

// A profile class of nonempty subsets of P(h,k). Subsets are bitmasks over
// rep.ground. The member list is only kept while the total number of
// subsets stays under limits.member_store_cap; the parity counts are always
// exact.
struct ProfileClass {
  ClassRep rep;
  std::vector<std::uint32_t> members;
  bool members_stored = false;
  Count even_members = 0;
  Count odd_members = 0;
};

// Groups every nonempty subset of P(h,k) by profile. Classes are ordered by
// profile. Throws LimitExceeded when |P(h,k)| > limits.class_ground_cap.
std::vector<ProfileClass> class_reps(int h, int k, const Limits& limits = {});

// sum over members P of (-1)^{|P|}.
Count class_alternating_sum(const ProfileClass& cls);

// (-1)^{|pr|+seg+1} when pr is a staircase, 0 otherwise.
Count staircase_sign_prediction(const Profile& profile);

}  // namespace ferrers
