#include <gtest/gtest.h>

#include "ferrers/errors.hpp"
#include "ferrers/profile.hpp"
#include "support.hpp"

using ferrers::Interval;
using ferrers::Partition;
using ferrers::Profile;
using ferrers::ProfileEntry;
using ferrers::testing::entry;
using ferrers::testing::tail;

TEST(Interval, Basics) {
  const Interval i(2, 4);
  EXPECT_EQ(i.size(), 3u);
  EXPECT_TRUE(i.contains(2));
  EXPECT_FALSE(i.contains(5));
  EXPECT_EQ(i.without_right(), Interval(2, 3));
  EXPECT_EQ(i.without_left(), Interval(3, 4));
  EXPECT_EQ(Interval::from(3).to_string(), "[3,inf]");
  EXPECT_THROW(Interval(0, 2), ferrers::InvalidArgument);
  EXPECT_THROW(Interval(3, 2), ferrers::InvalidArgument);
}

TEST(PInterval, Examples) {
  const Partition s{4, 2, 2, 2, 1, 1};
  EXPECT_EQ(ferrers::p_interval(s, 2), Interval(2, 4));
  EXPECT_FALSE(ferrers::p_interval(s, 3));
  EXPECT_EQ(ferrers::p_interval(s, 0), Interval::from(7));
  EXPECT_EQ(ferrers::p_interval({}, 0), Interval::from(1));
}

TEST(PInterval, IntervalsOfSingleton) {
  const auto got = ferrers::intervals_of({3, 3, 1});
  EXPECT_EQ(got, (std::vector<ProfileEntry>{entry(3, 1, 2), entry(1, 3, 3), tail(4)}));
}

TEST(Profile, FiveLevelExample) {
  const std::vector<Partition> P{{4, 2, 2, 2, 1, 1}, {4, 4, 4, 2, 1, 1, 1}, {4, 4, 2, 2, 2, 2, 1, 1}};
  const Profile pr = ferrers::profile(P);
  EXPECT_EQ(pr.level(4), (std::vector<ProfileEntry>{entry(4, 1, 3)}));
  EXPECT_TRUE(pr.level(3).empty());
  EXPECT_EQ(pr.level(2), (std::vector<ProfileEntry>{entry(2, 2, 4), entry(2, 3, 6)}));
  EXPECT_EQ(pr.level(1), (std::vector<ProfileEntry>{entry(1, 5, 7), entry(1, 7, 8)}));
  EXPECT_EQ(pr.level(0), (std::vector<ProfileEntry>{tail(7)}));
  EXPECT_EQ(pr.size(), 6u);
}

TEST(Profile, SplicingExample) {
  const std::vector<Partition> P{{2, 1, 1}, {2, 2, 1, 1}};
  EXPECT_EQ(ferrers::profile(P), Profile({entry(2, 1, 2), entry(1, 2, 3), entry(1, 3, 4), tail(4)}));
  EXPECT_EQ(ferrers::profile(P).to_string(), "{(2,[1,2]), (1,[2,3]), (1,[3,4]), (0,[4,inf])}");
}

TEST(Profile, SingletonIsItsIntervals) {
  for (const Partition& s : {Partition{5, 3, 3, 1}, Partition{2}, Partition{}}) {
    const std::vector<Partition> P{s};
    EXPECT_EQ(ferrers::profile(P).entries(), ferrers::intervals_of(s)) << s;
  }
}

TEST(Profile, Validation) {
  EXPECT_THROW(Profile({entry(1, 1, 2)}), ferrers::InvalidArgument);                   // no 0-entry
  EXPECT_THROW(Profile({entry(1, 1, 2), entry(1, 1, 1), tail(3)}), ferrers::InvalidArgument);  // nested
  EXPECT_THROW(ferrers::profile(std::vector<Partition>{}), ferrers::InvalidArgument);
}

TEST(Profile, Equivalence) {
  const std::vector<Partition> P{{2, 1, 1}, {2, 2, 1, 1}};
  const std::vector<Partition> cl{{2, 1, 1}, {2, 2, 1}, {2, 2, 1, 1}};
  EXPECT_TRUE(ferrers::profile_equivalent(P, cl));
  EXPECT_TRUE(ferrers::profile_equivalent(P, P));
  EXPECT_FALSE(ferrers::profile_equivalent(std::vector<Partition>{{1}}, std::vector<Partition>{{1, 1}}));
}
