#pragma once

#include <span>
#include <string>
#include <vector>

#include "ferrers/checked.hpp"

namespace ferrers {

// Power series in q truncated after q^N, with exact integer coefficients.
// Binary operations between series of different bounds truncate to the
// smaller bound. All arithmetic is overflow-checked.
class TruncatedSeries {
 public:
  // The zero series with bound N.
  explicit TruncatedSeries(int degree_bound);
  // Coefficients c_0, c_1, ...; entries past N are dropped, missing ones are 0.
  TruncatedSeries(int degree_bound, std::span<const Count> coeffs);

  static TruncatedSeries one(int degree_bound);
  // c * q^n, or zero when n > N.
  static TruncatedSeries monomial(int n, int degree_bound, Count c = 1);

  int degree_bound() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Count>& coefficients() const noexcept { return coeffs_; }
  // Zero for n outside [0, N].
  Count operator[](int n) const noexcept;

  // Adds c to the coefficient of q^n; ignored when n > N.
  void add_term(int n, Count c);

  TruncatedSeries truncated(int degree_bound) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  bool all_nonnegative() const noexcept;

  // "q^2 + q^3 + 2q^4"; "0" for the zero series.
  std::string to_string() const;

 private:
  std::vector<Count> coeffs_;
};

// 1 / prod_{i=1..m} (1 - q^i), truncated at N. Coefficient n counts
// partitions of n with parts <= m. m = 0 gives the series 1.
TruncatedSeries euler_inverse(int m, int degree_bound);

}  // namespace ferrers
