#include "ferrers/selector.hpp"

#include <algorithm>

#include "ferrers/errors.hpp"

namespace ferrers {

Partition sigma_selector(const Staircase& s, std::span<const ProfileEntry> choices) {
  const auto segs = segments(s);
  if (choices.size() != segs.size())
    throw InvalidArgument("sigma_selector: need one choice per maximal overlapping segment (" +
                          std::to_string(segs.size()) + "), got " + std::to_string(choices.size()));
  std::vector<ProfileEntry> pieces;
  for (std::size_t m = 0; m < segs.size(); ++m) {
    const ProfileEntry& chosen = choices[m];
    if (std::find(segs[m].begin(), segs[m].end(), chosen) == segs[m].end())
      throw InvalidArgument("sigma_selector: choice " + std::to_string(m + 1) + " is not in its segment");
    for (const auto& e : segs[m]) {
      if (e == chosen) {
        pieces.push_back(e);
      } else if (e.interval.size() > 1) {
        pieces.push_back({e.p, e.p > chosen.p ? e.interval.without_right() : e.interval.without_left()});
      }
    }
  }
  std::sort(pieces.begin(), pieces.end());

  // The pieces tile [1, inf) with decreasing values.
  std::vector<int> parts;
  std::size_t expected_left = 1;
  for (const auto& piece : pieces) {
    if (piece.interval.left() != expected_left)
      throw InvariantViolation("sigma_selector: pieces do not tile the index line at " +
                               std::to_string(expected_left));
    if (piece.interval.infinite()) break;
    parts.insert(parts.end(), piece.interval.size(), piece.p);
    expected_left = piece.interval.right() + 1;
  }
  return Partition::from_decreasing(std::move(parts));
}

Partition sigma_selector(const ClassRep& rep, std::span<const ProfileEntry> choices) {
  auto s = Staircase::from_profile(rep.profile);
  if (!s) throw InvalidArgument("sigma_selector: class profile is not a staircase");
  return sigma_selector(*s, choices);
}

std::vector<Partition> realize_staircase(const Staircase& s) {
  const auto segs = segments(s);
  std::vector<std::size_t> pick(segs.size(), 0);
  std::vector<Partition> out;
  std::vector<ProfileEntry> choices(segs.size(), segs.front().front());
  while (true) {
    for (std::size_t m = 0; m < segs.size(); ++m) choices[m] = segs[m][pick[m]];
    out.push_back(sigma_selector(s, choices));
    std::size_t m = 0;
    while (m < segs.size() && ++pick[m] == segs[m].size()) pick[m++] = 0;
    if (m == segs.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ferrers
