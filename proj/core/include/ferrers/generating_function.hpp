#pragma once

#include "ferrers/limits.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/series.hpp"

namespace ferrers {

// Generating function of Q(beta): q^{|beta|} / prod_{i=1..w_beta}(1 - q^i).
// beta must be nonempty.
TruncatedSeries q_gf(const Partition& beta, int degree_bound);

// F_{mu,k}(q) by brute force: coefficient n is |P_n(mu,k)|. Works for k = 0.
TruncatedSeries f_mu_k_enumerated(const Partition& mu, int k, int degree_bound,
                                  const Limits& limits = {});

// F_{mu,k}(q) as a signed sum over the augmented structures A(mu,h,k),
//   (1 / prod_{i=1..k+w_mu}(1-q^i)) * sum (-1)^{w_lambda} q^{|(mu,lambda,off)|}.
// Requires nonempty mu, k >= 1 and h >= h_mu. Structures heavier than the
// degree bound cannot contribute and are never generated.
TruncatedSeries f_mu_k_closed(const Partition& mu, int k, int h, int degree_bound);
// Same with h = h_mu.
TruncatedSeries f_mu_k_closed(const Partition& mu, int k, int degree_bound);

// Inclusion-exclusion over every nonempty P in P(h,k):
//   (1 / prod_{i=1..k+w_mu}(1-q^i)) * sum (-1)^{|P|+1} q^{|join(P, mu)|}.
// Exponential in |P(h,k)|; bounded by limits.class_ground_cap.
TruncatedSeries f_mu_k_inclusion_exclusion(const Partition& mu, int k, int h, int degree_bound,
                                           const Limits& limits = {});

// Signed sum over staircases S(h,k) using the staircase join formula:
//   (1 / prod_{i=1..k+w_mu}(1-q^i)) * sum (-1)^{|S|+seg(S)} q^{|vee_S(mu)|}.
TruncatedSeries f_mu_k_staircases(const Partition& mu, int k, int h, int degree_bound);

// sum_{n} |P_n(mu)| q^n assembled from q_gf(mu) (the k = 0 term, which is
// Q(mu)) and f_mu_k_closed for k = 1 .. N - |mu|.
TruncatedSeries wilf_series(const Partition& mu, int degree_bound);

// sum_{n} |P_n(mu)| q^n by direct enumeration; the oracle for wilf_series.
TruncatedSeries wilf_series_enumerated(const Partition& mu, int degree_bound,
                                       const Limits& limits = {});

}  // namespace ferrers
