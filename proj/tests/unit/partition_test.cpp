#include <gtest/gtest.h>

#include <sstream>

#include "ferrers/errors.hpp"
#include "ferrers/partition.hpp"

using ferrers::Partition;

TEST(Partition, SortsAndDropsZeros) {
  const std::vector<int> raw{1, 3, 0, 2, 3, 1};
  EXPECT_EQ(Partition(raw), (Partition{3, 3, 2, 1, 1}));
  EXPECT_TRUE(Partition({0, 0}).empty());
  EXPECT_TRUE(Partition().empty());
  const std::vector<int> values{3, 3, 2, 1, 1};
  EXPECT_EQ(ferrers::make_partition(values).to_string(), "3,3,2,1,1");
}

TEST(Partition, RejectsNegativeParts) {
  const std::vector<int> raw{2, -1};
  EXPECT_THROW(Partition{raw}, ferrers::InvalidArgument);
  EXPECT_THROW(Partition::from_decreasing({1, 2}), ferrers::InvalidArgument);
}

TEST(Partition, Statistics) {
  const Partition p{3, 3, 2, 1, 1};
  EXPECT_EQ(p.weight(), 10);
  EXPECT_EQ(p.height(), 5);
  EXPECT_EQ(p.width(), 3);
  EXPECT_EQ(p[1], 3);
  EXPECT_EQ(p[5], 1);
  EXPECT_EQ(p[6], 0);
  EXPECT_EQ(p.multiplicity(3), 2);
  EXPECT_EQ(p.multiplicity(4), 0);
  EXPECT_EQ(p.column(1), 5);
  EXPECT_EQ(p.column(3), 2);
  EXPECT_EQ(p.column(4), 0);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ((Partition{3, 3, 2, 1, 1}).conjugate(), (Partition{5, 3, 2}));
  EXPECT_EQ((Partition{5, 3, 2}).conjugate(), (Partition{3, 3, 2, 1, 1}));
  EXPECT_TRUE(Partition().conjugate().empty());
  for (const Partition& p : {Partition{4, 4, 1}, Partition{1}, Partition{6, 2, 2, 1}})
    EXPECT_EQ(p.conjugate().conjugate(), p);
}

TEST(Partition, FromColumns) {
  const std::vector<int> cols{2, 5, 3};
  EXPECT_EQ(Partition::from_columns(cols), (Partition{3, 3, 2, 1, 1}));
}

TEST(Partition, PartwiseSum) {
  EXPECT_EQ((Partition{2, 2, 2, 1, 1} + Partition{3, 2, 2, 1}), (Partition{5, 4, 4, 2, 1}));
  EXPECT_EQ((Partition{4, 1} + Partition()), (Partition{4, 1}));
  EXPECT_EQ((Partition{1} + Partition{1}), (Partition{2}));
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("5,4,4,2,1"), (Partition{5, 4, 4, 2, 1}));
  EXPECT_EQ(Partition::parse(" 1, 3 ,2 "), (Partition{3, 2, 1}));
  EXPECT_TRUE(Partition::parse("-").empty());
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_THROW(Partition::parse("3,x"), ferrers::ParseError);
  EXPECT_THROW(Partition::parse("3,,1"), ferrers::ParseError);
  EXPECT_THROW(Partition::parse("3,-1"), ferrers::ParseError);
  EXPECT_EQ(Partition().to_string(), "-");
  std::ostringstream os;
  os << Partition{2, 1};
  EXPECT_EQ(os.str(), "(2,1)");
}

TEST(Partition, Ordering) {
  EXPECT_LT((Partition{2, 1}), (Partition{2, 2}));
  EXPECT_LT(Partition(), (Partition{1}));
}
