#include "ferrers/equivalence.hpp"

#include <algorithm>
#include <map>

#include "ferrers/containment.hpp"
#include "ferrers/enumeration.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/generating_function.hpp"
#include "ferrers/rook.hpp"

namespace ferrers {

bool wilf_equivalent_upto(const Partition& mu, const Partition& tau, int degree_bound) {
  if (mu.empty() || tau.empty()) throw InvalidArgument("wilf_equivalent_upto: partitions must be nonempty");
  return wilf_series(mu, degree_bound) == wilf_series(tau, degree_bound);
}

std::vector<TruncatedSeries> width_series_table(const Partition& mu, int degree_bound,
                                                const Limits& limits) {
  if (mu.empty()) throw InvalidArgument("width_series_table: mu must be nonempty");
  if (degree_bound < 0) throw InvalidArgument("width_series_table: negative degree bound");
  if (degree_bound > limits.max_enumeration_weight)
    throw LimitExceeded("width_series_table: degree bound exceeds the enumeration bound");
  std::vector<TruncatedSeries> table(static_cast<std::size_t>(degree_bound) + 1,
                                     TruncatedSeries(degree_bound));
  for (int n = mu.weight(); n <= degree_bound; ++n)
    for (const auto& alpha : enumerate_partitions(n, limits))
      if (alpha.width() >= mu.width() && contains(alpha, mu))
        table[static_cast<std::size_t>(alpha.width() - mu.width())].add_term(n, 1);
  return table;
}

bool width_wilf_equivalent_upto(const Partition& mu, const Partition& tau, int degree_bound,
                                const Limits& limits) {
  if (mu.empty() || tau.empty())
    throw InvalidArgument("width_wilf_equivalent_upto: partitions must be nonempty");
  if (mu.width() != tau.width()) return false;
  return width_series_table(mu, degree_bound, limits) == width_series_table(tau, degree_bound, limits);
}

std::vector<std::vector<Partition>> rook_classes(int n, const Limits& limits) {
  if (n < 0) throw InvalidArgument("rook_classes: negative n");
  const int h = std::max(n, 1);
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::vector<Partition>> out;
  for (const auto& p : enumerate_partitions(n, limits)) {
    auto [it, fresh] = index.try_emplace(rook_multiset(p, h), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(p);
  }
  return out;
}

}  // namespace ferrers
