#include <gtest/gtest.h>

#include "ferrers/enumeration.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/profile.hpp"
#include "ferrers/splice.hpp"

using ferrers::Partition;

TEST(Splice, Examples) {
  EXPECT_EQ(ferrers::splice({2, 2, 1, 1}, 2, {2, 1, 1}), (Partition{2, 2, 1}));
  EXPECT_EQ(ferrers::splice({3, 2, 1}, 1, {3, 2, 1}), (Partition{3, 2, 1}));
  EXPECT_THROW(ferrers::splice({2, 1}, 1, {2, 2, 1}), ferrers::SpliceUndefined);
}

TEST(Splice, ResultIsAlwaysAPartition) {
  const auto all = ferrers::partitions_up_to(6);
  for (const auto& a : all)
    for (const auto& b : all)
      for (std::size_t i = 1; i <= static_cast<std::size_t>(a.height()); ++i)
        if (a[i] > b[i + 1]) {
          const Partition s = ferrers::splice(a, i, b);
          EXPECT_EQ(s[i], a[i]);
          EXPECT_EQ(s[i + 1], b[i + 1]);
        }
}

TEST(Closure, Examples) {
  const std::vector<Partition> P{{2, 1, 1}, {2, 2, 1, 1}};
  EXPECT_EQ(ferrers::closure(P), (std::vector<Partition>{{2, 1, 1}, {2, 2, 1}, {2, 2, 1, 1}}));
  const std::vector<Partition> one{{4, 2, 2}};
  EXPECT_EQ(ferrers::closure(one), one);
  EXPECT_THROW(ferrers::closure(std::vector<Partition>{}), ferrers::InvalidArgument);
}

TEST(Closure, IsIdempotentAndKeepsProfile) {
  const auto pool = ferrers::partitions_up_to(4);
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      const std::vector<Partition> P{pool[a], pool[b]};
      const auto cl = ferrers::closure(P);
      EXPECT_EQ(ferrers::closure(cl), cl);
      EXPECT_EQ(ferrers::profile(cl), ferrers::profile(P));
    }
}

TEST(Closure, Cap) {
  ferrers::Limits tight;
  tight.closure_cap = 2;
  const std::vector<Partition> P{{2, 1, 1}, {2, 2, 1, 1}};
  EXPECT_THROW(ferrers::closure(P, tight), ferrers::LimitExceeded);
}

TEST(Join, Vee) {
  EXPECT_EQ(ferrers::vee({5, 4, 4, 2, 1}, {5, 4, 3, 2, 1}), (Partition{5, 4, 4, 3, 2, 1}));
  EXPECT_EQ(ferrers::vee({3, 1}, {3, 1}), (Partition{3, 1}));
  EXPECT_EQ(ferrers::vee({3, 1}, {}), (Partition{3, 1}));
}

TEST(Join, Examples) {
  EXPECT_EQ(ferrers::join(std::vector<Partition>{{3, 2, 2, 1}, {3, 2, 1, 1}}, {2, 2, 2, 1, 1}),
            (Partition{5, 4, 4, 3, 2, 1}));
  EXPECT_EQ(ferrers::join(std::vector<Partition>{{2, 2, 2}, {2, 2, 1, 1}}, {4, 3, 3, 1}),
            (Partition{6, 5, 5, 4, 2, 1}));
  EXPECT_EQ(ferrers::join(std::vector<Partition>{{}}, {4, 1}), (Partition{4, 1}));
}

TEST(Join, SeparatingWitness) {
  // [a,b] = [2,4] for p = 2 in (4,2,2,2,1): (4K)^1 (2K)^3 with K = 4.
  EXPECT_EQ(ferrers::separating_witness({4, 2, 2, 2, 1}, 2, 4, 5), (Partition{16, 8, 8, 8}));
  // The 0-interval [6,inf] is cut at max_height + 1 = 6.
  EXPECT_EQ(ferrers::separating_witness({4, 2, 2, 2, 1}, 0, 4, 5), (Partition{16, 16, 16, 16, 16, 8}));
  EXPECT_TRUE(ferrers::separating_witness({4, 2}, 3, 4, 2).empty());
}

TEST(Join, WitnessSeparatesAMissingInterval) {
  // {(2,1,1)} lacks the 1-interval [3,4] of (2,2,1,1).
  const std::vector<Partition> P{{2, 1, 1}};
  std::vector<Partition> Pg{{2, 1, 1}, {2, 2, 1, 1}};
  const Partition mu = ferrers::separating_witness({2, 2, 1, 1}, 1, 2, 4);
  EXPECT_NE(ferrers::join(P, mu), ferrers::join(Pg, mu));
}
