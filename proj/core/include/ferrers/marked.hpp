#pragma once

#include <vector>

#include "ferrers/partition.hpp"
#include "ferrers/staircase.hpp"

namespace ferrers {

// (sigma, A): sigma in P(h,k) with a set A of marked columns, each of length
// at least 2. Marks are 1-based column indices kept in increasing order.
class MarkedPartition {
 public:
  // Throws InvalidArgument when a mark is outside [1, w_sigma], repeated, or
  // sits on a column of length < 2, or when sigma is empty.
  MarkedPartition(Partition sigma, std::vector<int> marks);

  const Partition& sigma() const noexcept { return sigma_; }
  const std::vector<int>& marks() const noexcept { return marks_; }
  bool marked(int column) const noexcept;
  // Number of marked columns strictly right of `column`.
  int marks_right_of(int column) const noexcept;

  friend bool operator==(const MarkedPartition&, const MarkedPartition&) = default;
  friend auto operator<=>(const MarkedPartition&, const MarkedPartition&) = default;

 private:
  Partition sigma_;
  std::vector<int> marks_;
};

// M(h,k), ordered by sigma (decreasing lexicographic) then by the mark
// subset read as a bitmask over the eligible columns.
std::vector<MarkedPartition> enumerate_marked(int h, int k);

// f: S(h,k) -> M(h,k). A = {1 + p_i : entry i left-overlapping};
// sigma = (p_1^{m_1}, ..., p_s^{m_s}) with m_i = b_i - a_i + 1, minus one for
// left-overlapping entries.
MarkedPartition stair_to_marked(const Staircase& s);

// Inverse of stair_to_marked.
Staircase marked_to_stair(const MarkedPartition& m);

}  // namespace ferrers
