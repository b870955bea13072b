#include "ferrers/containment.hpp"

#include <algorithm>

#include "ferrers/errors.hpp"

namespace ferrers {

bool contains(const Partition& sigma, const Partition& mu) {
  const int h = mu.height();
  if (h > sigma.height()) return false;
  // Earliest feasible row keeps the largest offset and the most rows in
  // reserve, which dominates every later choice.
  std::size_t row = 1;
  int max_offset = sigma.width();
  for (int i = 1; i <= h; ++i) {
    const int need = mu[static_cast<std::size_t>(i)];
    // Feasible rows have need <= sigma_r <= need + max_offset; rows are
    // decreasing, so skip the ones that are too long.
    while (row <= static_cast<std::size_t>(sigma.height()) && sigma[row] > need + max_offset) ++row;
    if (row > static_cast<std::size_t>(sigma.height()) || sigma[row] < need) return false;
    max_offset = sigma[row] - need;
    ++row;
  }
  return true;
}

bool contains_oracle(const Partition& sigma, const Partition& mu, const Limits& limits) {
  const int width = sigma.width();
  if (width > limits.oracle_max_width)
    throw LimitExceeded("contains_oracle: width " + std::to_string(width) + " exceeds oracle bound " +
                        std::to_string(limits.oracle_max_width));
  if (mu.empty()) return true;
  const auto target = mu.parts();
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(sigma.height()));
  for (std::uint32_t kept = 0; kept < (1u << width); ++kept) {
    if (__builtin_popcount(kept) < mu.width()) continue;
    rows.clear();
    for (int r : sigma.parts()) {
      int len = __builtin_popcount(kept & ((r >= 32) ? ~0u : ((1u << r) - 1)));
      if (len > 0) rows.push_back(len);
    }
    // rows is weakly decreasing; deleting rows leaves any sub-multiset.
    if (std::includes(rows.begin(), rows.end(), target.begin(), target.end(), std::greater<>()))
      return true;
  }
  return false;
}

bool contains_rows_only(const Partition& sigma, const Partition& mu) {
  const auto& s = sigma.parts();
  const auto& m = mu.parts();
  return std::includes(s.begin(), s.end(), m.begin(), m.end(), std::greater<>());
}

bool q_membership(const Partition& sigma, const Partition& beta) {
  const auto& s = sigma.parts();
  const auto& b = beta.parts();
  if (!std::includes(s.begin(), s.end(), b.begin(), b.end(), std::greater<>())) return false;
  // Extra parts must not exceed w_beta; with beta a sub-multiset this is
  // exactly w_sigma == w_beta, or sigma == beta == empty.
  return sigma.width() == beta.width();
}

}  // namespace ferrers
