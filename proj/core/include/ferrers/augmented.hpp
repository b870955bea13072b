#pragma once

#include <optional>
#include <vector>

#include "ferrers/marked.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

// (mu, lambda, off) for fixed h, k:
//   h_lambda <= h, h_off <= h + w_lambda, w_lambda + w_off = k,
//   every column of lambda has length >= 2.
// lambda is the L-partition, off the offset partition.
struct AugmentedStructure {
  Partition mu;
  Partition lambda;
  Partition off;
  int h = 0;
  int k = 0;

  bool valid() const;
  // (-1)^{w_lambda}.
  int sign() const noexcept { return lambda.width() % 2 == 0 ? 1 : -1; }

  friend bool operator==(const AugmentedStructure&, const AugmentedStructure&) = default;
  friend auto operator<=>(const AugmentedStructure&, const AugmentedStructure&) = default;
};

// Boxes in the reversed L anchored at column i of lambda:
// lambda*_i + (i-1) + mu_{lambda*_i}.
int l_hook_boxes(const Partition& mu, const Partition& lambda, int column);

// |mu| + |lambda| + |off| + a(a-1)/2 + sum_{i=1..a} mu_{lambda*_i}, a = w_lambda.
int augmented_weight(const AugmentedStructure& a);

// g: lambda has the marked columns {sigma*_i : i in A}; off has the columns
// {|A_{>i}| + sigma*_i : i not in A}.
AugmentedStructure marked_to_augmented(const MarkedPartition& m, const Partition& mu, int h);

// Inverse of g: each off column of length C goes back immediately left of
// the i rightmost lambda columns for the unique i with
// c_{i+1} >= C - i >= c_i (c ascending, c_0 = 0, c_{a+1} = inf).
MarkedPartition augmented_to_marked(const AugmentedStructure& a);

// A(mu,h,k) through the marked-partition bijection; with max_weight set,
// only structures of weight <= max_weight are produced (heavier ones are
// pruned before construction). Requires nonempty mu, h >= h_mu, k >= 1.
std::vector<AugmentedStructure> enumerate_augmented(const Partition& mu, int h, int k,
                                                    std::optional<int> max_weight = std::nullopt);

}  // namespace ferrers
