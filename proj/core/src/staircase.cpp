#include "ferrers/staircase.hpp"

#include <algorithm>
#include <functional>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {

// Empty string when valid, otherwise the violated condition.
std::string staircase_violation(const std::vector<ProfileEntry>& e) {
  if (e.size() < 2) return "a staircase needs a positive top value and the 0-entry";
  if (e.front().p < 1) return "top value must be positive";
  if (e.back().p != 0) return "last value must be 0";
  if (!e.back().interval.infinite()) return "the 0-entry must be right-infinite";
  if (e.front().interval.left() != 1) return "a_1 must be 1";
  if (e[1].interval.left() == 1) return "a_2 must differ from 1";
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i].p >= e[i - 1].p) return "values must be strictly decreasing";
    if (e[i - 1].interval.infinite()) return "only the 0-entry may be infinite";
    const std::size_t prev_b = e[i - 1].interval.right();
    const std::size_t a = e[i].interval.left();
    if (a != prev_b && a != prev_b + 1) return "a_i must be b_{i-1} or b_{i-1}+1";
  }
  return {};
}

}  // namespace

Staircase::Staircase(std::vector<ProfileEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  if (auto why = staircase_violation(entries_); !why.empty()) throw InvalidArgument("not a staircase: " + why);
}

std::optional<Staircase> Staircase::from_profile(const Profile& profile) {
  if (!staircase_violation(profile.entries()).empty()) return std::nullopt;
  return Staircase(profile.entries());
}

bool is_staircase(const Profile& profile) { return staircase_violation(profile.entries()).empty(); }

std::size_t Staircase::length() const noexcept { return entries_[entries_.size() - 2].interval.right(); }

bool Staircase::left_overlapping(std::size_t index) const noexcept {
  if (index == 0 || index >= entries_.size()) return false;
  return entries_[index].interval.left() == entries_[index - 1].interval.right();
}

std::vector<Staircase> enumerate_staircases(int h, int k) {
  if (h < 1 || k < 1) throw InvalidArgument("enumerate_staircases: h and k must be positive");
  std::vector<Staircase> out;
  std::vector<ProfileEntry> path;
  const auto hh = static_cast<std::size_t>(h);
  // Depth first: values count down from just below the previous one, the
  // overlapping left end is tried before the adjacent one, right ends ascend.
  std::function<void()> extend = [&]() {
    const ProfileEntry& last = path.back();
    const std::size_t prev_b = last.interval.right();
    for (int p = last.p - 1; p >= 0; --p) {
      for (std::size_t a : {prev_b, prev_b + 1}) {
        if (path.size() == 1 && a == 1) continue;
        if (p == 0) {
          path.push_back({0, Interval::from(a)});
          out.emplace_back(path);
          path.pop_back();
          continue;
        }
        for (std::size_t b = a; b <= hh; ++b) {
          path.push_back({p, Interval(a, b)});
          extend();
          path.pop_back();
        }
      }
    }
  };
  for (std::size_t b = 1; b <= hh; ++b) {
    path.push_back({k, Interval(1, b)});
    extend();
    path.pop_back();
  }
  return out;
}

std::vector<std::vector<ProfileEntry>> segments(const Staircase& s) {
  std::vector<std::vector<ProfileEntry>> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == 0 || !s.left_overlapping(i)) out.emplace_back();
    out.back().push_back(s.entries()[i]);
  }
  return out;
}

Partition vee_staircase(const Staircase& s, const Partition& mu) {
  std::vector<int> parts;
  for (const auto& e : s.entries()) {
    const std::size_t a = e.interval.left();
    const std::size_t b = e.interval.infinite() ? std::max<std::size_t>(a, mu.height()) : e.interval.right();
    for (std::size_t j = a; j <= b; ++j) {
      const int v = mu[j] + e.p;
      if (v > 0) parts.push_back(v);
    }
  }
  return Partition::from_decreasing(std::move(parts));
}

}  // namespace ferrers
