#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

// Closed index interval [left, right] with 1 <= left <= right. The right end
// may be kInfinity, which orders above every finite index.
class Interval {
 public:
  static constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

  Interval(std::size_t left, std::size_t right);
  static Interval from(std::size_t left) { return Interval(left, kInfinity); }

  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }
  bool infinite() const noexcept { return right_ == kInfinity; }
  // Number of indices; kInfinity for an infinite interval.
  std::size_t size() const noexcept { return infinite() ? kInfinity : right_ - left_ + 1; }

  bool contains(std::size_t i) const noexcept { return left_ <= i && i <= right_; }
  bool contains(const Interval& other) const noexcept {
    return left_ <= other.left_ && other.right_ <= right_;
  }

  // Drops the right (resp. left) endpoint; requires size() > 1. Dropping the
  // right end of an infinite interval leaves it infinite.
  Interval without_right() const;
  Interval without_left() const;

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;

 private:
  std::size_t left_;
  std::size_t right_;
};

// (p, I): part value p occupying the index interval I.
struct ProfileEntry {
  int p;
  Interval interval;

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
  // Decreasing p, then increasing interval.
  friend std::strong_ordering operator<=>(const ProfileEntry& a, const ProfileEntry& b) {
    if (a.p != b.p) return b.p <=> a.p;
    return a.interval <=> b.interval;
  }
};

// pr(P): for each value p, the inclusion-maximal p-intervals over the members
// of P. Entries are kept sorted by ProfileEntry ordering, so two profiles are
// equal as sets iff they compare equal.
class Profile {
 public:
  Profile() = default;
  // Sorts, dedupes and checks the maximality and zero-entry invariants.
  explicit Profile(std::vector<ProfileEntry> entries);

  const std::vector<ProfileEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool contains(const ProfileEntry& e) const;
  // pr_p(P).
  std::vector<ProfileEntry> level(int p) const;

  std::string to_string() const;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  std::vector<ProfileEntry> entries_;
};

// {i : sigma_i = p}. For p = 0 this is [h_sigma + 1, inf]; empty when p > 0
// is not a part of sigma.
std::optional<Interval> p_interval(const Partition& sigma, int p);

// All nonempty p-intervals of a single partition, one per distinct value
// including 0.
std::vector<ProfileEntry> intervals_of(const Partition& sigma);

// Throws InvalidArgument on an empty set.
Profile profile(std::span<const Partition> family);

bool profile_equivalent(std::span<const Partition> a, std::span<const Partition> b);

}  // namespace ferrers
