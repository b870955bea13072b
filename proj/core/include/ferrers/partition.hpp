#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ferrers {

// An integer partition: a weakly decreasing list of positive parts, padded
// conceptually by zeros at every index past the height. Row indices are
// 1-based throughout the library to match the usual Ferrers-board notation.
class Partition {
 public:
  Partition() = default;

  // Sorts decreasingly and drops zeros. Throws InvalidArgument on negatives.
  explicit Partition(std::span<const int> values);
  Partition(std::initializer_list<int> values);

  // Adopts an already weakly decreasing list of positive parts. Throws
  // InvalidArgument when the list is not in that form.
  static Partition from_decreasing(std::vector<int> parts);

  // Builds the partition whose column lengths are the given values.
  static Partition from_columns(std::span<const int> columns);

  // "5,4,4,2,1"; "-" for the empty partition. Whitespace around parts is
  // tolerated, zeros are dropped, and the parts may be given in any order.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }

  // mu_i for i >= 1; zero beyond the height.
  int operator[](std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  bool empty() const noexcept { return parts_.empty(); }
  int height() const noexcept { return static_cast<int>(parts_.size()); }
  int width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int weight() const noexcept;

  // sigma*_i = |{j : sigma_j >= i}|.
  Partition conjugate() const;
  // Length of column i (1-based); zero beyond the width.
  int column(int i) const noexcept;

  // Number of parts equal to p (p >= 1).
  int multiplicity(int p) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

// Partwise sum mu + alpha; equivalently the union of the two boards' columns.
Partition operator+(const Partition& mu, const Partition& alpha);

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Factory matching make_partition in the operation catalogue.
inline Partition make_partition(std::span<const int> values) { return Partition(values); }

}  // namespace ferrers
