#include "ferrers/rook.hpp"

#include <algorithm>

#include "ferrers/errors.hpp"

namespace ferrers {

std::vector<int> rook_multiset(const Partition& mu, int h) {
  if (h < mu.height())
    throw InvalidArgument("rook_multiset: h = " + std::to_string(h) + " is below h_mu = " +
                          std::to_string(mu.height()));
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::max(h, 0)));
  for (int i = 1; i <= h; ++i) out.push_back(mu[static_cast<std::size_t>(i)] + i);
  std::sort(out.begin(), out.end());
  return out;
}

bool rook_equivalent(const Partition& mu, const Partition& tau) {
  const int h = std::max({mu.height(), tau.height(), 1});
  return rook_multiset(mu, h) == rook_multiset(tau, h);
}

RookVector rook_numbers(const Partition& mu) {
  const auto cols = mu.conjugate().parts();  // decreasing
  RookVector r{1};
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    const Count c = *it;
    r.push_back(0);
    for (std::size_t j = r.size() - 1; j >= 1; --j) {
      const Count free = c - static_cast<Count>(j - 1);
      if (free > 0) r[j] = checked_add(r[j], checked_mul(r[j - 1], free));
    }
  }
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace ferrers
