#include "ferrers/profile_class.hpp"

#include <algorithm>
#include <map>

#include "ferrers/enumeration.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/splice.hpp"
#include "ferrers/staircase.hpp"

namespace ferrers {

ClassRep make_class_rep(std::span<const Partition> family, const Limits& limits) {
  ClassRep rep;
  rep.ground.assign(family.begin(), family.end());
  rep.closure = closure(family, limits);
  rep.profile = profile(family);
  return rep;
}

std::vector<ProfileClass> class_reps(int h, int k, const Limits& limits) {
  std::vector<Partition> ground = bounded_partitions(h, k);
  const std::size_t n = ground.size();
  if (n > limits.class_ground_cap || n >= 32)
    throw LimitExceeded("class_reps: |P(" + std::to_string(h) + "," + std::to_string(k) + ")| = " +
                        std::to_string(n) + " exceeds cap " + std::to_string(limits.class_ground_cap));

  std::vector<std::vector<ProfileEntry>> singles;
  singles.reserve(n);
  for (const auto& g : ground) singles.push_back(intervals_of(g));

  const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
  const bool store = subsets <= limits.member_store_cap;

  std::map<Profile, ProfileClass> grouped;
  std::vector<Partition> chosen;
  for (std::uint32_t mask = 1; mask <= subsets; ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) chosen.push_back(ground[i]);
    Profile pr = profile(chosen);
    auto [it, inserted] = grouped.try_emplace(std::move(pr));
    ProfileClass& cls = it->second;
    if (inserted) {
      cls.rep.ground = ground;
      cls.rep.profile = it->first;
      cls.rep.closure = closure(chosen, limits);
      cls.members_stored = store;
    }
    if (store) cls.members.push_back(mask);
    if (__builtin_popcount(mask) % 2 == 0)
      cls.even_members = checked_add(cls.even_members, 1);
    else
      cls.odd_members = checked_add(cls.odd_members, 1);
  }

  std::vector<ProfileClass> out;
  out.reserve(grouped.size());
  for (auto& [pr, cls] : grouped) out.push_back(std::move(cls));
  return out;
}

Count class_alternating_sum(const ProfileClass& cls) { return checked_sub(cls.even_members, cls.odd_members); }

Count staircase_sign_prediction(const Profile& profile) {
  auto s = Staircase::from_profile(profile);
  if (!s) return 0;
  const std::size_t exponent = s->size() + seg(*s) + 1;
  return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace ferrers
