#include <gtest/gtest.h>

#include <random>

#include "ferrers/bipartite.hpp"
#include "ferrers/errors.hpp"

using ferrers::BipartiteGraph;
using ferrers::Side;
using Mask = BipartiteGraph::Mask;

namespace {

BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t l, std::size_t r) {
  BipartiteGraph g(l, r);
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (rng() % 2) g.add_edge(a, b);
  return g;
}

// Y covers X and no proper subset of Y does (checked over all subsets).
std::vector<Mask> minimal_oracle(const BipartiteGraph& g, Side target, Mask x) {
  const Side search = ferrers::other(target);
  const Mask all = g.all(search);
  auto covers = [&](Mask y) {
    Mask n = 0;
    for (std::size_t v = 0; v < g.size(search); ++v)
      if (y & (Mask{1} << v)) n |= g.neighbors_of(search, v);
    return (n & x) == x;
  };
  std::vector<Mask> out;
  for (Mask y = 0; y <= all; ++y) {
    if ((y & all) != y || !covers(y)) continue;
    bool minimal = true;
    for (Mask z = (y - 1) & y;; z = (z - 1) & y) {
      if (z != y && covers(z)) {
        minimal = false;
        break;
      }
      if (z == 0) break;
    }
    if (minimal) out.push_back(y);
  }
  return out;
}

ferrers::Count covering_oracle(const BipartiteGraph& g, Side side) {
  const Side target = ferrers::other(side);
  ferrers::Count s = 0;
  for (Mask y = 0; y <= g.all(side); ++y) {
    Mask n = 0;
    for (std::size_t v = 0; v < g.size(side); ++v)
      if (y & (Mask{1} << v)) n |= g.neighbors_of(side, v);
    if (n == g.all(target)) s += __builtin_popcountll(y) % 2 ? -1 : 1;
  }
  return s;
}

}  // namespace

TEST(Bipartite, Adjacency) {
  BipartiteGraph g(2, 3);
  g.add_edge(0, 2);
  g.add_edge(1, 0);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(0, 0));
  EXPECT_EQ(g.neighbors_of(Side::Left, 0), Mask{0b100});
  EXPECT_EQ(g.neighbors_of(Side::Right, 0), Mask{0b10});
  EXPECT_EQ(g.neighbors(Side::Left, 0b11), Mask{0b101});
  EXPECT_EQ(g.all(Side::Right), Mask{0b111});
  EXPECT_THROW(g.add_edge(2, 0), ferrers::InvalidArgument);
  EXPECT_THROW(BipartiteGraph(65, 1), ferrers::LimitExceeded);
}

TEST(Bipartite, SingleVertexCover) {
  BipartiteGraph g(3, 1);
  for (std::size_t a = 0; a < 3; ++a) g.add_edge(a, 0);
  EXPECT_EQ(ferrers::minimal_sets(g, Side::Left), (std::vector<Mask>{1}));
}

TEST(Bipartite, MinimalSetsMatchOracle) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 150; ++t) {
    const auto g = random_graph(rng, 1 + rng() % 6, 1 + rng() % 6);
    for (Side target : {Side::Left, Side::Right}) {
      EXPECT_EQ(ferrers::minimal_sets(g, target), minimal_oracle(g, target, g.all(target)));
      const Mask x = rng() & g.all(target);
      EXPECT_EQ(ferrers::minimal_sets(g, target, x), minimal_oracle(g, target, x));
    }
  }
}

TEST(Bipartite, CoveringSumsMatchOracleAndEachOther) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, 1 + rng() % 7, 1 + rng() % 7);
    const auto l = ferrers::covering_alternating_sum(g, Side::Left);
    EXPECT_EQ(l, covering_oracle(g, Side::Left));
    EXPECT_EQ(l, ferrers::covering_alternating_sum(g, Side::Right));
  }
}

TEST(Bipartite, CoveringSmallCases) {
  BipartiteGraph edge(1, 1);
  edge.add_edge(0, 0);
  EXPECT_EQ(ferrers::covering_alternating_sum(edge, Side::Left), -1);
  BipartiteGraph none(1, 1);
  EXPECT_EQ(ferrers::covering_alternating_sum(none, Side::Left), 0);
  EXPECT_EQ(ferrers::covering_alternating_sum(none, Side::Right), 0);
}

TEST(Bipartite, MinimalSetsCap) {
  ferrers::Limits tight;
  tight.minimal_sets_cap = 4;
  BipartiteGraph g(6, 6);
  EXPECT_THROW(ferrers::minimal_sets(g, Side::Left, tight), ferrers::LimitExceeded);
}
