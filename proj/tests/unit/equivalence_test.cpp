#include <gtest/gtest.h>

#include "ferrers/enumeration.hpp"
#include "ferrers/equivalence.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/generating_function.hpp"
#include "ferrers/rook.hpp"

using ferrers::Partition;

TEST(Equivalence, Wilf) {
  EXPECT_TRUE(ferrers::wilf_equivalent_upto({3, 1}, {2, 2}, 16));
  EXPECT_TRUE(ferrers::wilf_equivalent_upto({4, 2}, {4, 2}, 14));
  EXPECT_FALSE(ferrers::wilf_equivalent_upto({2, 1}, {1, 1, 1}, 6));
  EXPECT_THROW(ferrers::wilf_equivalent_upto({}, {1}, 6), ferrers::InvalidArgument);
}

TEST(Equivalence, WidthWilf) {
  EXPECT_TRUE(ferrers::width_wilf_equivalent_upto({3, 2}, {3, 1, 1}, 16));
  EXPECT_FALSE(ferrers::width_wilf_equivalent_upto({3, 1}, {2, 2}, 16));
}

TEST(Equivalence, WidthTableMatchesPerKEnumeration) {
  constexpr int N = 12;
  for (const Partition& mu : {Partition{1}, Partition{2, 1}, Partition{3, 1, 1}}) {
    const auto table = ferrers::width_series_table(mu, N);
    ASSERT_EQ(table.size(), static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k)
      EXPECT_EQ(table[static_cast<std::size_t>(k)], ferrers::f_mu_k_enumerated(mu, k, N)) << mu << " k=" << k;
  }
}

TEST(Equivalence, RookClasses) {
  const auto four = ferrers::rook_classes(4);
  const std::vector<std::vector<Partition>> want{{{4}, {1, 1, 1, 1}}, {{3, 1}, {2, 2}, {2, 1, 1}}};
  EXPECT_EQ(four, want);
  const auto zero = ferrers::rook_classes(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], std::vector<Partition>{Partition{}});
  for (int n = 0; n <= 10; ++n) {
    std::size_t total = 0;
    for (const auto& cls : ferrers::rook_classes(n)) {
      total += cls.size();
      for (const auto& p : cls) EXPECT_TRUE(ferrers::rook_equivalent(p, cls.front()));
    }
    EXPECT_EQ(total, ferrers::partitions_of(n).size());
  }
}

TEST(Equivalence, ConjugatesAreRookEquivalent) {
  for (const auto& p : ferrers::partitions_up_to(9)) EXPECT_TRUE(ferrers::rook_equivalent(p, p.conjugate())) << p;
}
