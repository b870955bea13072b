#include "ferrers/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "ferrers/errors.hpp"

namespace ferrers {

Partition::Partition(std::span<const int> values) {
  parts_.reserve(values.size());
  for (int v : values) {
    if (v < 0) throw InvalidArgument("partition parts must be nonnegative, got " + std::to_string(v));
    if (v > 0) parts_.push_back(v);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition::Partition(std::initializer_list<int> values)
    : Partition(std::span<const int>(values.begin(), values.size())) {}

Partition Partition::from_decreasing(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw InvalidArgument("from_decreasing: parts are not weakly decreasing and positive");
  }
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

Partition Partition::from_columns(std::span<const int> columns) {
  return Partition(columns).conjugate();
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "-" || text.empty()) return {};
  std::vector<int> values;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("invalid partition part '" + std::string(token) + "'");
    if (v < 0) throw ParseError("negative partition part '" + std::string(token) + "'");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(values);
}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::column(int i) const noexcept {
  if (i < 1) return 0;
  // parts_ is decreasing: count parts >= i.
  auto it = std::partition_point(parts_.begin(), parts_.end(), [i](int p) { return p >= i; });
  return static_cast<int>(it - parts_.begin());
}

Partition Partition::conjugate() const {
  Partition c;
  c.parts_.resize(static_cast<std::size_t>(width()));
  for (int i = 1; i <= width(); ++i) c.parts_[static_cast<std::size_t>(i - 1)] = column(i);
  return c;
}

int Partition::multiplicity(int p) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), p));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition operator+(const Partition& mu, const Partition& alpha) {
  std::vector<int> parts(static_cast<std::size_t>(std::max(mu.height(), alpha.height())));
  for (std::size_t i = 1; i <= parts.size(); ++i) parts[i - 1] = mu[i] + alpha[i];
  return Partition::from_decreasing(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.to_string() << ')'; }

}  // namespace ferrers
