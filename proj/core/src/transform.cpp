#include "ferrers/transform.hpp"

#include <deque>
#include <string>
#include <unordered_map>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {

// Builds the candidate board; nullopt if (i,j) is not a cell or the rows do
// not form a Ferrers board afterwards.
std::optional<Partition> build(const Partition& mu, int i, int j) {
  if (i < 1 || j < 1 || i > mu.height() || mu[static_cast<std::size_t>(i)] < j) return std::nullopt;
  std::vector<int> sub;
  for (int x = i; x <= mu.height(); ++x) {
    const int len = mu[static_cast<std::size_t>(x)] - (j - 1);
    if (len <= 0) break;
    sub.push_back(len);
  }
  const Partition flipped = Partition::from_decreasing(sub).conjugate();
  const int rows = std::max(mu.height(), i - 1 + flipped.height());
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(rows));
  for (int x = 1; x <= rows; ++x) {
    const int base = mu[static_cast<std::size_t>(x)];
    if (x < i) {
      out.push_back(base);
      continue;
    }
    const int extra = flipped[static_cast<std::size_t>(x - i + 1)];
    if (extra > 0 && base < j - 1) return std::nullopt;
    out.push_back(std::min(base, j - 1) + extra);
  }
  for (std::size_t x = 1; x < out.size(); ++x)
    if (out[x] > out[x - 1]) return std::nullopt;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return Partition::from_decreasing(std::move(out));
}

}  // namespace

Partition ij_transform(const Partition& mu, int i, int j) {
  auto r = build(mu, i, j);
  if (!r)
    throw InvalidArgument("(" + std::to_string(i) + "," + std::to_string(j) + ")-transform of " +
                          mu.to_string() + " is not a Ferrers board");
  return *std::move(r);
}

std::optional<Partition> try_ij_transform(const Partition& mu, int i, int j) { return build(mu, i, j); }

std::vector<std::pair<TransformStep, Partition>> valid_transforms(const Partition& mu) {
  std::vector<std::pair<TransformStep, Partition>> out;
  for (int i = 1; i <= mu.height(); ++i)
    for (int j = 1; j <= mu[static_cast<std::size_t>(i)]; ++j)
      if (auto r = build(mu, i, j)) out.emplace_back(TransformStep{i, j}, *std::move(r));
  return out;
}

std::optional<std::vector<TransformStep>> transform_chain(const Partition& mu, const Partition& tau,
                                                          int max_steps, const Limits& limits) {
  if (max_steps < 0) throw InvalidArgument("transform_chain: negative max_steps");
  if (mu == tau) return std::vector<TransformStep>{};
  if (mu.weight() != tau.weight()) return std::nullopt;

  struct Visit {
    std::string parent;
    TransformStep step;
    int depth;
  };
  std::unordered_map<std::string, Visit> seen;
  seen.emplace(mu.to_string(), Visit{"", {0, 0}, 0});
  std::deque<Partition> queue{mu};
  const std::string goal = tau.to_string();

  while (!queue.empty()) {
    Partition cur = std::move(queue.front());
    queue.pop_front();
    const std::string key = cur.to_string();
    const int depth = seen.at(key).depth;
    if (depth >= max_steps) continue;
    for (auto& [step, next] : valid_transforms(cur)) {
      std::string nkey = next.to_string();
      if (seen.count(nkey)) continue;
      seen.emplace(nkey, Visit{key, step, depth + 1});
      if (nkey == goal) {
        std::vector<TransformStep> chain;
        for (std::string at = goal; !seen.at(at).parent.empty(); at = seen.at(at).parent)
          chain.push_back(seen.at(at).step);
        return std::vector<TransformStep>(chain.rbegin(), chain.rend());
      }
      if (seen.size() > limits.transform_state_cap)
        throw LimitExceeded("transform_chain: state budget exceeded");
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

Partition apply_chain(const Partition& mu, const std::vector<TransformStep>& chain) {
  Partition cur = mu;
  for (const auto& s : chain) cur = ij_transform(cur, s.i, s.j);
  return cur;
}

}  // namespace ferrers
