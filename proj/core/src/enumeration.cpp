#include "ferrers/enumeration.hpp"

#include <numeric>

#include "ferrers/containment.hpp"
#include "ferrers/errors.hpp"

namespace ferrers {

PartitionsOfWeight::PartitionsOfWeight(int n, const Limits& limits) {
  if (n < 0) throw InvalidArgument("enumerate_partitions: negative weight");
  if (n > limits.max_enumeration_weight)
    throw LimitExceeded("enumerate_partitions: weight " + std::to_string(n) + " exceeds bound " +
                        std::to_string(limits.max_enumeration_weight));
  if (n > 0) parts_.push_back(n);
  current_ = Partition::from_decreasing(parts_);
}

void PartitionsOfWeight::advance() {
  if (done_) return;
  // Decreasing-lex successor: strip trailing 1s, decrement the last part > 1
  // and refill the freed weight greedily with parts no larger than it.
  int freed = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    parts_.pop_back();
    ++freed;
  }
  if (parts_.empty()) {
    done_ = true;
    return;
  }
  const int cap = --parts_.back();
  ++freed;
  while (freed > 0) {
    const int p = std::min(cap, freed);
    parts_.push_back(p);
    freed -= p;
  }
  current_ = Partition::from_decreasing(parts_);
}

std::optional<Partition> PartitionsOfWeight::next() {
  if (done_) return std::nullopt;
  if (started_) advance();
  started_ = true;
  if (done_) return std::nullopt;
  return current_;
}

BoundedPartitions::BoundedPartitions(int h, int k, std::optional<int> max_weight)
    : h_(h), k_(k), max_weight_(max_weight.value_or(std::numeric_limits<int>::max())) {
  if (h < 1 || k < 1) throw InvalidArgument("enumerate_bounded: h and k must be positive");
  if (k_ > max_weight_) {
    done_ = true;
    return;
  }
  parts_.push_back(k_);
  weight_ = k_;
  fill_greedily();
  publish();
}

void BoundedPartitions::fill_greedily() {
  while (static_cast<int>(parts_.size()) < h_) {
    const int p = std::min(parts_.back(), max_weight_ - weight_);
    if (p <= 0) break;
    parts_.push_back(p);
    weight_ += p;
  }
}

void BoundedPartitions::publish() { current_ = Partition::from_decreasing(parts_); }

void BoundedPartitions::advance() {
  if (done_) return;
  // Depth-first over part lists with larger parts first; a prefix is emitted
  // after all of its extensions. The first part is pinned to k.
  if (parts_.size() == 1) {
    done_ = true;
    return;
  }
  if (parts_.back() == 1) {
    parts_.pop_back();
    weight_ -= 1;
  } else {
    --parts_.back();
    --weight_;
    fill_greedily();
  }
  publish();
}

std::optional<Partition> BoundedPartitions::next() {
  if (done_) return std::nullopt;
  if (started_) advance();
  started_ = true;
  if (done_) return std::nullopt;
  return current_;
}

std::vector<Partition> partitions_of(int n, const Limits& limits) {
  std::vector<Partition> out;
  for (const Partition& p : PartitionsOfWeight(n, limits)) out.push_back(p);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, const Limits& limits) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n) {
    for (const Partition& p : PartitionsOfWeight(n, limits)) out.push_back(p);
  }
  return out;
}

std::vector<Partition> bounded_partitions(int h, int k) {
  std::vector<Partition> out;
  for (const Partition& p : BoundedPartitions(h, k)) out.push_back(p);
  return out;
}

Count count_containing(const Partition& mu, int n, std::optional<int> k, const Limits& limits) {
  if (k && mu.empty()) throw InvalidArgument("count_containing: width offset needs a nonempty mu");
  if (k && *k < 0) throw InvalidArgument("count_containing: negative width offset");
  Count total = 0;
  for (const Partition& sigma : PartitionsOfWeight(n, limits)) {
    if (k && sigma.width() != mu.width() + *k) continue;
    if (contains(sigma, mu)) total = checked_add(total, 1);
  }
  return total;
}

}  // namespace ferrers
