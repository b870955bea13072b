#pragma once

#include <cstddef>
#include <iterator>
#include <optional>

#include "ferrers/checked.hpp"
#include "ferrers/limits.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

namespace detail {

// Minimal input iterator over a generator exposing `const Partition* current()`
// and `void advance()`.
template <class Generator>
class GeneratorIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = Partition;
  using difference_type = std::ptrdiff_t;
  using pointer = const Partition*;
  using reference = const Partition&;

  GeneratorIterator() = default;
  explicit GeneratorIterator(Generator* gen) : gen_(gen) {
    if (gen_ && !gen_->current()) gen_ = nullptr;
  }
  reference operator*() const { return *gen_->current(); }
  pointer operator->() const { return gen_->current(); }
  GeneratorIterator& operator++() {
    gen_->advance();
    if (!gen_->current()) gen_ = nullptr;
    return *this;
  }
  void operator++(int) { ++*this; }
  friend bool operator==(const GeneratorIterator& a, const GeneratorIterator& b) {
    return a.gen_ == b.gen_;
  }

 private:
  Generator* gen_ = nullptr;
};

}  // namespace detail

// All partitions of n, each once, in decreasing lexicographic order:
// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1^n). For n = 0 the stream holds
// only the empty partition. Single pass; iterate with a range-for.
class PartitionsOfWeight {
 public:
  explicit PartitionsOfWeight(int n, const Limits& limits = {});

  const Partition* current() const { return done_ ? nullptr : &current_; }
  void advance();
  std::optional<Partition> next();

  detail::GeneratorIterator<PartitionsOfWeight> begin() {
    return detail::GeneratorIterator<PartitionsOfWeight>(this);
  }
  detail::GeneratorIterator<PartitionsOfWeight> end() { return {}; }

 private:
  Partition current_;
  std::vector<int> parts_;
  bool done_ = false;
  bool started_ = false;
};

// P(h,k): partitions of height <= h and width exactly k, optionally capped
// by weight. Decreasing lexicographic order on the zero-padded part lists,
// so (k^h) comes first and (k) last.
class BoundedPartitions {
 public:
  BoundedPartitions(int h, int k, std::optional<int> max_weight = std::nullopt);

  const Partition* current() const { return done_ ? nullptr : &current_; }
  void advance();
  std::optional<Partition> next();

  detail::GeneratorIterator<BoundedPartitions> begin() {
    return detail::GeneratorIterator<BoundedPartitions>(this);
  }
  detail::GeneratorIterator<BoundedPartitions> end() { return {}; }

 private:
  void fill_greedily();
  void publish();

  int h_;
  int k_;
  int max_weight_;
  std::vector<int> parts_;
  int weight_ = 0;
  Partition current_;
  bool done_ = false;
  bool started_ = false;
};

inline PartitionsOfWeight enumerate_partitions(int n, const Limits& limits = {}) {
  return PartitionsOfWeight(n, limits);
}

inline BoundedPartitions enumerate_bounded(int h, int k) { return BoundedPartitions(h, k); }

// Materialized helpers for tests and suites.
std::vector<Partition> partitions_of(int n, const Limits& limits = {});
std::vector<Partition> partitions_up_to(int max_weight, const Limits& limits = {});
std::vector<Partition> bounded_partitions(int h, int k);

// |P_n(mu)| when k is absent, |P_n(mu,k)| otherwise (partitions of weight n
// containing mu with width w_mu + k). Requires nonempty mu when k is given.
Count count_containing(const Partition& mu, int n, std::optional<int> k = std::nullopt,
                       const Limits& limits = {});

}  // namespace ferrers
