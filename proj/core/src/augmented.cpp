#include "ferrers/augmented.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "ferrers/enumeration.hpp"
#include "ferrers/errors.hpp"

namespace ferrers {

bool AugmentedStructure::valid() const {
  if (mu.empty() || h < 1 || k < 1) return false;
  if (lambda.height() > h) return false;
  if (off.height() > h + lambda.width()) return false;
  if (lambda.width() + off.width() != k) return false;
  return lambda.empty() || lambda.column(lambda.width()) >= 2;
}

int l_hook_boxes(const Partition& mu, const Partition& lambda, int column) {
  const int len = lambda.column(column);
  return len + (column - 1) + mu[static_cast<std::size_t>(len)];
}

int augmented_weight(const AugmentedStructure& s) {
  int w = s.mu.weight() + s.off.weight();
  for (int i = 1; i <= s.lambda.width(); ++i) w += l_hook_boxes(s.mu, s.lambda, i);
  return w;
}

AugmentedStructure marked_to_augmented(const MarkedPartition& m, const Partition& mu, int h) {
  const Partition& sigma = m.sigma();
  std::vector<int> lambda_cols;
  std::vector<int> off_cols;
  for (int i = 1; i <= sigma.width(); ++i) {
    if (m.marked(i))
      lambda_cols.push_back(sigma.column(i));
    else
      off_cols.push_back(m.marks_right_of(i) + sigma.column(i));
  }
  return AugmentedStructure{mu, Partition::from_columns(lambda_cols), Partition::from_columns(off_cols), h,
                            sigma.width()};
}

MarkedPartition augmented_to_marked(const AugmentedStructure& s) {
  // c_1 <= ... <= c_a: lambda's columns read right to left.
  std::vector<int> c = s.lambda.conjugate().parts();
  std::reverse(c.begin(), c.end());
  const int a = static_cast<int>(c.size());
  auto col = [&](int i) -> long long {
    if (i <= 0) return 0;
    if (i > a) return std::numeric_limits<long long>::max();
    return c[static_cast<std::size_t>(i - 1)];
  };

  // slots[i]: unmarked columns that sit immediately left of the i rightmost
  // marked columns.
  std::vector<std::vector<int>> slots(static_cast<std::size_t>(a) + 1);
  const Partition off_columns = s.off.conjugate();
  for (int len : off_columns.parts()) {
    int i = 0;
    while (col(i + 1) < len - i) ++i;
    if (!(len - i >= col(i)) || len - i < 1)
      throw InvariantViolation("no insertion slot for offset column " + std::to_string(len));
    slots[static_cast<std::size_t>(i)].push_back(len - i);
  }

  std::vector<int> columns;
  std::vector<int> marks;
  for (int i = a; i >= 0; --i) {
    auto& slot = slots[static_cast<std::size_t>(i)];
    std::sort(slot.begin(), slot.end(), std::greater<>());
    columns.insert(columns.end(), slot.begin(), slot.end());
    if (i >= 1) {
      columns.push_back(c[static_cast<std::size_t>(i - 1)]);
      marks.push_back(static_cast<int>(columns.size()));
    }
  }
  if (!std::is_sorted(columns.begin(), columns.end(), std::greater<>()))
    throw InvariantViolation("reinserted columns do not form a partition");
  return MarkedPartition(Partition::from_decreasing(columns).conjugate(), std::move(marks));
}

std::vector<AugmentedStructure> enumerate_augmented(const Partition& mu, int h, int k,
                                                    std::optional<int> max_weight) {
  if (mu.empty()) throw InvalidArgument("enumerate_augmented: mu must be nonempty");
  if (k < 1) throw InvalidArgument("enumerate_augmented: k must be positive");
  if (h < mu.height()) throw InvalidArgument("enumerate_augmented: h must be at least h_mu");

  std::vector<AugmentedStructure> out;
  const int unlimited = std::numeric_limits<int>::max() / 2;
  const int budget = max_weight ? *max_weight - mu.weight() : unlimited;
  if (budget < 0) return out;

  // The structure built from (sigma, A) weighs |mu| + |sigma| plus, for each
  // marked column i, mu_{sigma*_i} + i - 1.
  for (const Partition& sigma : BoundedPartitions(h, k, budget)) {
    std::vector<int> eligible;
    std::vector<int> cost;
    for (int i = 1; i <= k; ++i) {
      const int len = sigma.column(i);
      if (len < 2) continue;
      eligible.push_back(i);
      cost.push_back(mu[static_cast<std::size_t>(len)] + i - 1);
    }
    std::vector<int> marks;
    std::function<void(std::size_t, int)> choose = [&](std::size_t next, int left) {
      if (next == eligible.size()) {
        out.push_back(marked_to_augmented(MarkedPartition(sigma, marks), mu, h));
        return;
      }
      choose(next + 1, left);
      if (cost[next] <= left) {
        marks.push_back(eligible[next]);
        choose(next + 1, left - cost[next]);
        marks.pop_back();
      }
    };
    choose(0, budget - sigma.weight());
  }
  return out;
}

}  // namespace ferrers
