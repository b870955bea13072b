#include "ferrers/profile.hpp"

#include <algorithm>
#include <map>

#include "ferrers/errors.hpp"

namespace ferrers {

Interval::Interval(std::size_t left, std::size_t right) : left_(left), right_(right) {
  if (left < 1 || left == kInfinity || left > right)
    throw InvalidArgument("invalid interval [" + std::to_string(left) + "," +
                          (right == kInfinity ? std::string("inf") : std::to_string(right)) + "]");
}

Interval Interval::without_right() const {
  if (size() <= 1) throw InvalidArgument("cannot trim a one-index interval");
  return infinite() ? *this : Interval(left_, right_ - 1);
}

Interval Interval::without_left() const {
  if (size() <= 1) throw InvalidArgument("cannot trim a one-index interval");
  return Interval(left_ + 1, right_);
}

std::string Interval::to_string() const {
  return "[" + std::to_string(left_) + "," + (infinite() ? std::string("inf") : std::to_string(right_)) + "]";
}

namespace {

// Keeps the inclusion-maximal intervals per value.
std::vector<ProfileEntry> maximal_entries(std::vector<ProfileEntry> entries) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  std::vector<ProfileEntry> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    bool dominated = false;
    for (const auto& f : entries) {
      if (f.p == e.p && f != e && f.interval.contains(e.interval)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(e);
  }
  return out;
}

}  // namespace

Profile::Profile(std::vector<ProfileEntry> entries) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  int zero_entries = 0;
  for (const auto& e : entries) {
    if (e.p < 0) throw InvalidArgument("profile entry with negative value");
    if ((e.p == 0) != e.interval.infinite())
      throw InvalidArgument("exactly the 0-entries of a profile are right-infinite");
    if (e.p == 0) ++zero_entries;
    for (const auto& f : entries) {
      if (f.p == e.p && f != e && f.interval.contains(e.interval))
        throw InvalidArgument("profile intervals of one value must be incomparable");
    }
  }
  if (zero_entries != 1) throw InvalidArgument("a profile has exactly one 0-entry");
  entries_ = std::move(entries);
}

bool Profile::contains(const ProfileEntry& e) const {
  return std::binary_search(entries_.begin(), entries_.end(), e);
}

std::vector<ProfileEntry> Profile::level(int p) const {
  std::vector<ProfileEntry> out;
  for (const auto& e : entries_)
    if (e.p == p) out.push_back(e);
  return out;
}

std::string Profile::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(entries_[i].p) + "," + entries_[i].interval.to_string() + ")";
  }
  return out + "}";
}

std::optional<Interval> p_interval(const Partition& sigma, int p) {
  if (p < 0) return std::nullopt;
  const auto h = static_cast<std::size_t>(sigma.height());
  if (p == 0) return Interval::from(h + 1);
  const auto& parts = sigma.parts();
  auto lo = std::find(parts.begin(), parts.end(), p);
  if (lo == parts.end()) return std::nullopt;
  auto hi = std::find_if(lo, parts.end(), [p](int v) { return v != p; });
  return Interval(static_cast<std::size_t>(lo - parts.begin()) + 1, static_cast<std::size_t>(hi - parts.begin()));
}

std::vector<ProfileEntry> intervals_of(const Partition& sigma) {
  std::vector<ProfileEntry> out;
  const auto& parts = sigma.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out.push_back({parts[i], Interval(i + 1, j)});
    i = j;
  }
  out.push_back({0, Interval::from(parts.size() + 1)});
  return out;
}

Profile profile(std::span<const Partition> family) {
  if (family.empty()) throw InvalidArgument("profile of an empty family");
  std::vector<ProfileEntry> all;
  for (const auto& sigma : family) {
    auto entries = intervals_of(sigma);
    all.insert(all.end(), entries.begin(), entries.end());
  }
  return Profile(maximal_entries(std::move(all)));
}

bool profile_equivalent(std::span<const Partition> a, std::span<const Partition> b) {
  return profile(a) == profile(b);
}

}  // namespace ferrers
