#include "ferrers/splice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ferrers/errors.hpp"
#include "ferrers/profile.hpp"

namespace ferrers {

Partition splice(const Partition& alpha, std::size_t i, const Partition& beta) {
  if (i < 1) throw InvalidArgument("splice index must be positive");
  if (!(alpha[i] > beta[i + 1]))
    throw SpliceUndefined("splice " + alpha.to_string() + " *_" + std::to_string(i) + " " + beta.to_string() +
                          " needs alpha_i > beta_{i+1}");
  std::vector<int> parts;
  for (std::size_t j = 1; j <= i; ++j) parts.push_back(alpha[j]);
  for (std::size_t j = i + 1; j <= static_cast<std::size_t>(beta.height()); ++j) parts.push_back(beta[j]);
  return Partition::from_decreasing(std::move(parts));
}

std::vector<Partition> closure(std::span<const Partition> family, const Limits& limits) {
  if (family.empty()) throw InvalidArgument("closure of an empty family");
  std::set<Partition> seen(family.begin(), family.end());
  std::vector<Partition> members(seen.begin(), seen.end());
  // Every pair (x, y) is spliced in both orders once the later of the two is
  // processed.
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (std::size_t other = 0; other <= next; ++other) {
      for (int dir = 0; dir < 2; ++dir) {
        // Copies: members may reallocate below.
        const Partition a = dir == 0 ? members[next] : members[other];
        const Partition b = dir == 0 ? members[other] : members[next];
        for (std::size_t i = 1; i <= static_cast<std::size_t>(a.height()); ++i) {
          if (!(a[i] > b[i + 1])) continue;
          Partition s = splice(a, i, b);
          if (seen.insert(s).second) {
            if (seen.size() > limits.closure_cap)
              throw LimitExceeded("closure exceeds " + std::to_string(limits.closure_cap) + " partitions");
            members.push_back(std::move(s));
          }
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Partition vee(const Partition& alpha, const Partition& beta) {
  std::map<int, int, std::greater<>> mult;
  for (int p : alpha.parts()) ++mult[p];
  std::map<int, int, std::greater<>> other;
  for (int p : beta.parts()) ++other[p];
  for (auto [p, m] : other) mult[p] = std::max(mult[p], m);
  std::vector<int> parts;
  for (auto [p, m] : mult) parts.insert(parts.end(), static_cast<std::size_t>(m), p);
  return Partition::from_decreasing(std::move(parts));
}

Partition join(std::span<const Partition> family, const Partition& mu) {
  if (family.empty()) throw InvalidArgument("join over an empty family");
  Partition out = mu + family.front();
  for (std::size_t i = 1; i < family.size(); ++i) out = vee(out, mu + family[i]);
  return out;
}

Partition separating_witness(const Partition& gamma, int p, int max_width, int max_height) {
  auto interval = p_interval(gamma, p);
  if (!interval) return {};
  const std::size_t a = interval->left();
  const std::size_t b = interval->infinite() ? static_cast<std::size_t>(max_height) + 1 : interval->right();
  std::vector<int> parts(a - 1, 4 * max_width);
  if (b >= a) parts.insert(parts.end(), b - a + 1, 2 * max_width);
  return Partition(parts);
}

}  // namespace ferrers
