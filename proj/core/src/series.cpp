#include "ferrers/series.hpp"

#include <algorithm>

#include "ferrers/errors.hpp"

namespace ferrers {

TruncatedSeries::TruncatedSeries(int degree_bound) {
  if (degree_bound < 0) throw InvalidArgument("degree bound must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(degree_bound) + 1, 0);
}

TruncatedSeries::TruncatedSeries(int degree_bound, std::span<const Count> coeffs)
    : TruncatedSeries(degree_bound) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  std::copy_n(coeffs.begin(), n, coeffs_.begin());
}

TruncatedSeries TruncatedSeries::one(int degree_bound) { return monomial(0, degree_bound); }

TruncatedSeries TruncatedSeries::monomial(int n, int degree_bound, Count c) {
  TruncatedSeries s(degree_bound);
  s.add_term(n, c);
  return s;
}

Count TruncatedSeries::operator[](int n) const noexcept {
  if (n < 0 || n > degree_bound()) return 0;
  return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::add_term(int n, Count c) {
  if (n < 0) throw InvalidArgument("negative exponent");
  if (n > degree_bound()) return;
  auto& slot = coeffs_[static_cast<std::size_t>(n)];
  slot = checked_add(slot, c);
}

TruncatedSeries TruncatedSeries::truncated(int degree_bound) const {
  if (degree_bound > this->degree_bound())
    throw InvalidArgument("cannot extend a truncated series past its bound");
  return TruncatedSeries(degree_bound, coeffs_);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.degree_bound() < degree_bound()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.degree_bound() < degree_bound()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

TruncatedSeries operator-(const TruncatedSeries& a) { return TruncatedSeries(a.degree_bound()) - a; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int bound = std::min(a.degree_bound(), b.degree_bound());
  TruncatedSeries out(bound);
  for (int i = 0; i <= bound; ++i) {
    const Count ai = a[i];
    if (ai == 0) continue;
    for (int j = 0; i + j <= bound; ++j) {
      if (b[j] == 0) continue;
      out.add_term(i + j, checked_mul(ai, b[j]));
    }
  }
  return out;
}

bool TruncatedSeries::all_nonnegative() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Count c) { return c >= 0; });
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    Count c = coeffs_[n];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Count mag = c < 0 ? -c : c;
    if (mag != 1 || n == 0) out += std::to_string(mag);
    if (n >= 1) out += 'q';
    if (n >= 2) out += '^' + std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

TruncatedSeries euler_inverse(int m, int degree_bound) {
  if (m < 0) throw InvalidArgument("euler_inverse: negative part bound");
  // Multiplying by 1/(1 - q^i) is the running sum c_n += c_{n-i}.
  TruncatedSeries s = TruncatedSeries::one(degree_bound);
  std::vector<Count> c(s.coefficients());
  for (int i = 1; i <= m && i <= degree_bound; ++i) {
    for (int n = i; n <= degree_bound; ++n) {
      c[static_cast<std::size_t>(n)] = checked_add(c[static_cast<std::size_t>(n)], c[static_cast<std::size_t>(n - i)]);
    }
  }
  return TruncatedSeries(degree_bound, c);
}

}  // namespace ferrers
