#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ferrers/partition.hpp"
#include "ferrers/profile.hpp"

namespace ferrers {

// A profile of the form {(p_1,[a_1,b_1]), ..., (p_{s+1},[a_{s+1},inf])} with
//   k = p_1 > p_2 > ... > p_{s+1} = 0,
//   a_1 = 1, a_2 != 1, a_i <= b_i,
//   a_i in {b_{i-1}, b_{i-1} + 1}.
// Entries are stored in the order above (decreasing p). The zero entry is
// always present.
class Staircase {
 public:
  // Throws InvalidArgument unless the entries (in any order) form a staircase.
  explicit Staircase(std::vector<ProfileEntry> entries);

  // Empty optional when the profile is not a staircase.
  static std::optional<Staircase> from_profile(const Profile& profile);

  const std::vector<ProfileEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  int top() const noexcept { return entries_.front().p; }
  // b_s: the right end of the last finite interval.
  std::size_t length() const noexcept;

  // a_i == b_{i-1}; entry 0 is never left-overlapping.
  bool left_overlapping(std::size_t index) const noexcept;

  Profile as_profile() const { return Profile(entries_); }
  std::string to_string() const { return as_profile().to_string(); }

  friend bool operator==(const Staircase&, const Staircase&) = default;
  friend auto operator<=>(const Staircase& a, const Staircase& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<ProfileEntry> entries_;
};

bool is_staircase(const Profile& profile);

// S(h,k): every staircase of length <= h with p_1 = k. Ordered by decreasing
// part sequence, then by the interval endpoints; see staircase.cpp.
std::vector<Staircase> enumerate_staircases(int h, int k);

// Maximal overlapping segments: maximal runs of consecutive entries in which
// each entry left-overlaps its predecessor. They partition the entries.
std::vector<std::vector<ProfileEntry>> segments(const Staircase& s);
inline std::size_t seg(const Staircase& s) { return segments(s).size(); }

// vee_S(mu) = (mu_{a_1}+p_1, ..., mu_{b_1}+p_1, mu_{a_2}+p_2, ...).
Partition vee_staircase(const Staircase& s, const Partition& mu);

}  // namespace ferrers
