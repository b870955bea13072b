#include <gtest/gtest.h>

#include <set>

#include "ferrers/augmented.hpp"
#include "ferrers/enumeration.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/generating_function.hpp"
#include "support.hpp"

using ferrers::Count;
using ferrers::Partition;
using ferrers::TruncatedSeries;

namespace {

TruncatedSeries S(int N, std::vector<Count> c) { return TruncatedSeries(N, c); }

// A(mu,h,k) straight from the definition: lambda in an h x k box with every
// column of length >= 2, off with h_off <= h + w_lambda and
// w_lambda + w_off = k. Weight uses the closed sum a(a-1)/2 + sum mu_{lambda*_i}.
struct Direct {
  Partition lambda, off;
  int weight;
  int sign;
  auto operator<=>(const Direct&) const = default;
};

std::vector<Direct> direct_augmented(const Partition& mu, int h, int k) {
  std::vector<Direct> out;
  for (const auto& lambda : ferrers::testing::box_partitions(h, k)) {
    if (!lambda.empty() && lambda.column(lambda.width()) < 2) continue;
    const int a = lambda.width();
    for (const auto& off : ferrers::testing::box_partitions(h + a, k - a)) {
      if (off.width() != k - a) continue;
      int w = mu.weight() + lambda.weight() + off.weight() + a * (a - 1) / 2;
      for (int i = 1; i <= a; ++i) w += mu[static_cast<std::size_t>(lambda.column(i))];
      out.push_back({lambda, off, w, a % 2 == 0 ? 1 : -1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(QSeries, QOfBeta) {
  EXPECT_EQ(ferrers::q_gf({1}, 3), S(3, {0, 1, 1, 1}));
  EXPECT_EQ(ferrers::q_gf({2}, 4), S(4, {0, 0, 1, 1, 2}));
  EXPECT_THROW(ferrers::q_gf({}, 3), ferrers::InvalidArgument);
}

TEST(QSeries, EnumeratedExamples) {
  EXPECT_EQ(ferrers::f_mu_k_enumerated({1}, 1, 6), S(6, {0, 0, 1, 1, 2, 2, 3}));
  EXPECT_EQ(ferrers::f_mu_k_enumerated({1}, 0, 4), S(4, {0, 1, 1, 1, 1}));
}

TEST(QSeries, KZeroIsQOfMu) {
  for (const auto& mu : ferrers::partitions_up_to(6)) {
    if (mu.empty()) continue;
    EXPECT_EQ(ferrers::f_mu_k_enumerated(mu, 0, 14), ferrers::q_gf(mu, 14)) << mu;
  }
}

TEST(QSeries, ClosedSimplest) {
  // Only (lambda, off) = (empty, (1)); numerator q^2.
  const auto all = ferrers::enumerate_augmented({1}, 1, 1);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].lambda.empty());
  EXPECT_EQ(all[0].off, (Partition{1}));
  EXPECT_EQ(ferrers::augmented_weight(all[0]), 2);
  EXPECT_EQ(ferrers::f_mu_k_closed({1}, 1, 1, 6), S(6, {0, 0, 1, 1, 2, 2, 3}));
}

TEST(QSeries, ClosedPreconditions) {
  EXPECT_THROW(ferrers::f_mu_k_closed({}, 1, 12), ferrers::InvalidArgument);
  EXPECT_THROW(ferrers::f_mu_k_closed({1}, 0, 12), ferrers::InvalidArgument);
  EXPECT_THROW(ferrers::f_mu_k_closed({2, 1}, 1, 1, 12), ferrers::InvalidArgument);
}

TEST(QSeries, EnumerateAugmentedMatchesDefinition) {
  for (const Partition& mu : {Partition{1}, Partition{2, 1}, Partition{3, 1, 1}, Partition{2, 2}})
    for (int h = std::max(1, mu.height()); h <= mu.height() + 2; ++h)
      for (int k = 1; k <= 3; ++k) {
        std::vector<Direct> got;
        for (const auto& a : ferrers::enumerate_augmented(mu, h, k)) {
          ASSERT_TRUE(a.valid());
          got.push_back({a.lambda, a.off, ferrers::augmented_weight(a), a.sign()});
        }
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, direct_augmented(mu, h, k)) << mu << " h=" << h << " k=" << k;
      }
}

TEST(QSeries, WeightPruningKeepsLightStructures) {
  const Partition mu{2, 1};
  for (int bound : {3, 6, 9, 12}) {
    std::multiset<int> pruned, full;
    for (const auto& a : ferrers::enumerate_augmented(mu, 3, 3, bound)) pruned.insert(ferrers::augmented_weight(a));
    for (const auto& a : ferrers::enumerate_augmented(mu, 3, 3))
      if (ferrers::augmented_weight(a) <= bound) full.insert(ferrers::augmented_weight(a));
    EXPECT_EQ(pruned, full) << bound;
  }
}

TEST(QSeries, DirectOracleNumeratorGivesEnumeratedSeries) {
  constexpr int N = 14;
  for (const Partition& mu : {Partition{1}, Partition{2, 1}, Partition{3, 2}, Partition{2, 2, 1}})
    for (int k = 1; k <= 3; ++k) {
      TruncatedSeries num(N);
      for (const auto& d : direct_augmented(mu, mu.height(), k)) num.add_term(d.weight, d.sign);
      EXPECT_EQ(num * ferrers::euler_inverse(k + mu.width(), N), ferrers::f_mu_k_enumerated(mu, k, N))
          << mu << " k=" << k;
    }
}

TEST(QSeries, FourFormulasAgree) {
  constexpr int N = 13;
  for (const Partition& mu : {Partition{1}, Partition{2}, Partition{2, 1}, Partition{1, 1}, Partition{3, 1}})
    for (int k = 1; k <= 2; ++k)
      for (int h = mu.height(); h <= 2; ++h) {
        if (h < 1) continue;
        const auto e = ferrers::f_mu_k_enumerated(mu, k, N);
        EXPECT_EQ(ferrers::f_mu_k_closed(mu, k, h, N), e) << mu << " k=" << k << " h=" << h;
        EXPECT_EQ(ferrers::f_mu_k_inclusion_exclusion(mu, k, h, N), e) << mu << " k=" << k << " h=" << h;
        EXPECT_EQ(ferrers::f_mu_k_staircases(mu, k, h, N), e) << mu << " k=" << k << " h=" << h;
      }
}

TEST(QSeries, InclusionExclusionCap) {
  ferrers::Limits tight;
  tight.class_ground_cap = 2;
  EXPECT_THROW(ferrers::f_mu_k_inclusion_exclusion({1}, 2, 2, 8, tight), ferrers::LimitExceeded);
}

TEST(WilfSeries, EveryNonemptyPartitionContainsOne) {
  constexpr int N = 20;
  const auto p = ferrers::testing::euler_partition_counts(N);
  const auto s = ferrers::wilf_series({1}, N);
  EXPECT_EQ(s[0], 0);
  for (int n = 1; n <= N; ++n) EXPECT_EQ(s[n], p[static_cast<std::size_t>(n)]) << n;
}

TEST(WilfSeries, SmallFacts) {
  const auto s = ferrers::wilf_series({2, 1}, 12);
  EXPECT_EQ(s[4], 2);
  EXPECT_EQ(s[3], 1);
  EXPECT_EQ(s[2], 0);
  for (const auto& mu : ferrers::partitions_up_to(6)) {
    if (mu.empty()) continue;
    EXPECT_EQ(ferrers::wilf_series(mu, 16), ferrers::wilf_series_enumerated(mu, 16)) << mu;
    EXPECT_EQ(ferrers::wilf_series(mu, 16)[mu.weight()], 1) << mu;
  }
}
