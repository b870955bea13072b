#pragma once

#include <functional>
#include <vector>

#include "ferrers/checked.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/profile.hpp"

namespace ferrers::testing {

inline ProfileEntry entry(int p, std::size_t a, std::size_t b) { return ProfileEntry{p, Interval(a, b)}; }
inline ProfileEntry tail(std::size_t a) { return ProfileEntry{0, Interval::from(a)}; }

// p(n) by Euler's pentagonal recurrence.
inline std::vector<Count> euler_partition_counts(int n) {
  std::vector<Count> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Count total = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > m) break;
      const Count sign = (j % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p;
}

// Every partition with at most max_rows parts, each at most max_part.
inline std::vector<Partition> box_partitions(int max_rows, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int cap) {
    out.push_back(Partition::from_decreasing(cur));
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int v = 1; v <= cap; ++v) {
      cur.push_back(v);
      go(v);
      cur.pop_back();
    }
  };
  go(max_part);
  return out;
}

}  // namespace ferrers::testing
