#include <gtest/gtest.h>

#include <set>

#include "ferrers/errors.hpp"
#include "ferrers/marked.hpp"
#include "ferrers/profile_class.hpp"
#include "ferrers/staircase.hpp"
#include "support.hpp"

using ferrers::Partition;
using ferrers::Profile;
using ferrers::ProfileEntry;
using ferrers::Staircase;
using ferrers::testing::entry;
using ferrers::testing::tail;

namespace {

Staircase big_example() {
  return Staircase({entry(6, 1, 3), entry(5, 3, 5), entry(4, 5, 5), entry(3, 6, 7), entry(2, 7, 8), tail(8)});
}

}  // namespace

TEST(Staircase, Validation) {
  EXPECT_NO_THROW(Staircase({entry(1, 1, 1), tail(2)}));
  EXPECT_THROW(Staircase({entry(1, 2, 2), tail(3)}), ferrers::InvalidArgument);                 // a_1 != 1
  EXPECT_THROW(Staircase({entry(2, 1, 1), entry(1, 1, 2), tail(3)}), ferrers::InvalidArgument);  // a_2 = 1
  EXPECT_THROW(Staircase({entry(2, 1, 2), entry(1, 4, 4), tail(5)}), ferrers::InvalidArgument);  // gap
  EXPECT_THROW(Staircase({entry(2, 1, 3), entry(1, 2, 4), tail(5)}), ferrers::InvalidArgument);  // overlap of 2
  EXPECT_FALSE(Staircase::from_profile(Profile({entry(1, 1, 3), tail(2)})));
  EXPECT_TRUE(ferrers::is_staircase(Profile({entry(1, 1, 2), tail(2)})));
}

TEST(Staircase, Accessors) {
  const auto s = big_example();
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(s.top(), 6);
  EXPECT_EQ(s.length(), 8u);
  EXPECT_FALSE(s.left_overlapping(0));
  EXPECT_TRUE(s.left_overlapping(1));
  EXPECT_TRUE(s.left_overlapping(2));
  EXPECT_FALSE(s.left_overlapping(3));
}

TEST(Staircase, EnumerationSmallest) {
  const auto all = ferrers::enumerate_staircases(1, 1);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0], Staircase({entry(1, 1, 1), tail(2)}));
}

TEST(Staircase, EnumerationContainsTheBigExample) {
  const auto all = ferrers::enumerate_staircases(8, 6);
  EXPECT_NE(std::find(all.begin(), all.end(), big_example()), all.end());
  std::set<Staircase> distinct(all.begin(), all.end());
  EXPECT_EQ(distinct.size(), all.size());
  for (const auto& s : all) {
    EXPECT_EQ(s.top(), 6);
    EXPECT_LE(s.length(), 8u);
  }
}

TEST(Staircase, EnumerationMatchesStaircaseClassProfiles) {
  for (auto [h, k] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}, {4, 1}}) {
    std::set<Staircase> from_classes;
    for (const auto& c : ferrers::class_reps(h, k))
      if (auto s = Staircase::from_profile(c.rep.profile)) from_classes.insert(*s);
    const auto all = ferrers::enumerate_staircases(h, k);
    EXPECT_EQ(std::set<Staircase>(all.begin(), all.end()), from_classes) << h << "," << k;
  }
}

TEST(Staircase, CountsMatchMarkedPartitions) {
  for (int h = 1; h <= 5; ++h)
    for (int k = 1; k <= 5; ++k)
      EXPECT_EQ(ferrers::enumerate_staircases(h, k).size(), ferrers::enumerate_marked(h, k).size()) << h << "," << k;
}

TEST(Staircase, Segments) {
  const auto segs = ferrers::segments(big_example());
  ASSERT_EQ(segs.size(), 2u);
  EXPECT_EQ(segs[0], (std::vector<ProfileEntry>{entry(6, 1, 3), entry(5, 3, 5), entry(4, 5, 5)}));
  EXPECT_EQ(segs[1], (std::vector<ProfileEntry>{entry(3, 6, 7), entry(2, 7, 8), tail(8)}));
  EXPECT_EQ(ferrers::seg(big_example()), 2u);
  const Staircase separate({entry(3, 1, 1), entry(2, 2, 3), entry(1, 4, 4), tail(5)});
  EXPECT_EQ(ferrers::seg(separate), 4u);
}

TEST(Staircase, VeeStaircase) {
  const Staircase s({entry(2, 1, 3), entry(1, 3, 4), tail(4)});
  EXPECT_EQ(ferrers::vee_staircase(s, {4, 3, 3, 1}), (Partition{6, 5, 5, 4, 2, 1}));
  EXPECT_EQ(ferrers::vee_staircase(s, {}), (Partition{2, 2, 2, 1, 1}));
}
