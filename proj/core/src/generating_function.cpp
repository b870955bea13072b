#include "ferrers/generating_function.hpp"

#include "ferrers/augmented.hpp"
#include "ferrers/enumeration.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/splice.hpp"
#include "ferrers/staircase.hpp"

namespace ferrers {

namespace {

void require_theorem_inputs(const char* who, const Partition& mu, int k, int h) {
  if (mu.empty()) throw InvalidArgument(std::string(who) + ": mu must be nonempty");
  if (k < 1) throw InvalidArgument(std::string(who) + ": k must be positive (k = 0 is Q(mu), see q_gf)");
  if (h < mu.height())
    throw InvalidArgument(std::string(who) + ": h = " + std::to_string(h) + " is below h_mu = " +
                          std::to_string(mu.height()));
}

}  // namespace

TruncatedSeries q_gf(const Partition& beta, int degree_bound) {
  if (beta.empty()) throw InvalidArgument("q_gf: beta must be nonempty");
  return TruncatedSeries::monomial(beta.weight(), degree_bound) * euler_inverse(beta.width(), degree_bound);
}

TruncatedSeries f_mu_k_enumerated(const Partition& mu, int k, int degree_bound, const Limits& limits) {
  if (mu.empty()) throw InvalidArgument("f_mu_k_enumerated: mu must be nonempty");
  if (k < 0) throw InvalidArgument("f_mu_k_enumerated: negative k");
  if (degree_bound > limits.max_enumeration_weight)
    throw LimitExceeded("f_mu_k_enumerated: degree bound exceeds the enumeration bound");
  TruncatedSeries out(degree_bound);
  for (int n = mu.weight() + k; n <= degree_bound; ++n) out.add_term(n, count_containing(mu, n, k, limits));
  return out;
}

TruncatedSeries f_mu_k_closed(const Partition& mu, int k, int h, int degree_bound) {
  require_theorem_inputs("f_mu_k_closed", mu, k, h);
  TruncatedSeries numerator(degree_bound);
  for (const auto& s : enumerate_augmented(mu, h, k, degree_bound))
    numerator.add_term(augmented_weight(s), s.sign());
  return numerator * euler_inverse(k + mu.width(), degree_bound);
}

TruncatedSeries f_mu_k_closed(const Partition& mu, int k, int degree_bound) {
  return f_mu_k_closed(mu, k, mu.height(), degree_bound);
}

TruncatedSeries f_mu_k_inclusion_exclusion(const Partition& mu, int k, int h, int degree_bound,
                                           const Limits& limits) {
  require_theorem_inputs("f_mu_k_inclusion_exclusion", mu, k, h);
  const auto ground = bounded_partitions(h, k);
  if (ground.size() > limits.class_ground_cap || ground.size() >= 32)
    throw LimitExceeded("f_mu_k_inclusion_exclusion: |P(h,k)| exceeds cap");
  TruncatedSeries numerator(degree_bound);
  std::vector<Partition> chosen;
  for (std::uint32_t mask = 1; mask < (1u << ground.size()); ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (mask & (1u << i)) chosen.push_back(ground[i]);
    numerator.add_term(join(chosen, mu).weight(), __builtin_popcount(mask) % 2 == 1 ? 1 : -1);
  }
  return numerator * euler_inverse(k + mu.width(), degree_bound);
}

TruncatedSeries f_mu_k_staircases(const Partition& mu, int k, int h, int degree_bound) {
  require_theorem_inputs("f_mu_k_staircases", mu, k, h);
  TruncatedSeries numerator(degree_bound);
  for (const auto& s : enumerate_staircases(h, k)) {
    const std::size_t parity = (s.size() + seg(s)) % 2;
    numerator.add_term(vee_staircase(s, mu).weight(), parity == 0 ? 1 : -1);
  }
  return numerator * euler_inverse(k + mu.width(), degree_bound);
}

TruncatedSeries wilf_series(const Partition& mu, int degree_bound) {
  if (mu.empty()) throw InvalidArgument("wilf_series: mu must be nonempty");
  TruncatedSeries out = q_gf(mu, degree_bound);
  for (int k = 1; mu.weight() + k <= degree_bound; ++k) out += f_mu_k_closed(mu, k, degree_bound);
  return out;
}

TruncatedSeries wilf_series_enumerated(const Partition& mu, int degree_bound, const Limits& limits) {
  if (mu.empty()) throw InvalidArgument("wilf_series_enumerated: mu must be nonempty");
  TruncatedSeries out(degree_bound);
  for (int n = mu.weight(); n <= degree_bound; ++n) out.add_term(n, count_containing(mu, n, std::nullopt, limits));
  return out;
}

}  // namespace ferrers
