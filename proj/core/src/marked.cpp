#include "ferrers/marked.hpp"

#include <algorithm>
#include <set>

#include "ferrers/enumeration.hpp"
#include "ferrers/errors.hpp"

namespace ferrers {

MarkedPartition::MarkedPartition(Partition sigma, std::vector<int> marks)
    : sigma_(std::move(sigma)), marks_(std::move(marks)) {
  if (sigma_.empty()) throw InvalidArgument("marked partition over the empty partition");
  std::sort(marks_.begin(), marks_.end());
  for (std::size_t i = 0; i < marks_.size(); ++i) {
    const int c = marks_[i];
    if (i > 0 && marks_[i - 1] == c) throw InvalidArgument("repeated mark " + std::to_string(c));
    if (c < 1 || c > sigma_.width()) throw InvalidArgument("mark " + std::to_string(c) + " outside [1, w_sigma]");
    if (sigma_.column(c) < 2)
      throw InvalidArgument("marked column " + std::to_string(c) + " has length < 2");
  }
}

bool MarkedPartition::marked(int column) const noexcept {
  return std::binary_search(marks_.begin(), marks_.end(), column);
}

int MarkedPartition::marks_right_of(int column) const noexcept {
  return static_cast<int>(marks_.end() - std::upper_bound(marks_.begin(), marks_.end(), column));
}

std::vector<MarkedPartition> enumerate_marked(int h, int k) {
  std::vector<MarkedPartition> out;
  for (const Partition& sigma : BoundedPartitions(h, k)) {
    std::vector<int> eligible;
    for (int i = 1; i <= k; ++i)
      if (sigma.column(i) > 1) eligible.push_back(i);
    for (std::uint32_t mask = 0; mask < (1u << eligible.size()); ++mask) {
      std::vector<int> marks;
      for (std::size_t b = 0; b < eligible.size(); ++b)
        if (mask & (1u << b)) marks.push_back(eligible[b]);
      out.emplace_back(sigma, std::move(marks));
    }
  }
  return out;
}

MarkedPartition stair_to_marked(const Staircase& s) {
  const auto& e = s.entries();
  std::vector<int> marks;
  std::vector<int> parts;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const bool overlapping = s.left_overlapping(i);
    if (overlapping) marks.push_back(e[i].p + 1);
    if (e[i].p == 0) continue;
    const std::size_t span = e[i].interval.right() - e[i].interval.left() + 1;
    parts.insert(parts.end(), span - (overlapping ? 1 : 0), e[i].p);
  }
  return MarkedPartition(Partition::from_decreasing(std::move(parts)), std::move(marks));
}

Staircase marked_to_stair(const MarkedPartition& m) {
  const Partition& sigma = m.sigma();
  std::set<int, std::greater<>> values(sigma.parts().begin(), sigma.parts().end());
  for (int a : m.marks()) values.insert(a - 1);
  values.insert(0);

  std::vector<ProfileEntry> entries;
  std::size_t prefix = 0;  // m_1 + ... + m_{i-1}
  for (int p : values) {
    const bool overlapping = m.marked(p + 1);
    const std::size_t a = prefix + (overlapping ? 0 : 1);
    if (p == 0) {
      entries.push_back({0, Interval::from(a)});
      break;
    }
    const auto mult = static_cast<std::size_t>(sigma.multiplicity(p));
    const std::size_t b = a + mult - (overlapping ? 0 : 1);
    entries.push_back({p, Interval(a, b)});
    prefix += mult;
  }
  return Staircase(std::move(entries));
}

}  // namespace ferrers
