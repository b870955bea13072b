#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ferrers/checked.hpp"
#include "ferrers/limits.hpp"
#include "ferrers/profile_class.hpp"

namespace ferrers {

enum class Side { Left, Right };

inline Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// Finite bipartite graph with at most 64 vertices per side. Vertex sets are
// bitmasks over each side's indices.
class BipartiteGraph {
 public:
  using Mask = std::uint64_t;

  BipartiteGraph(std::size_t left_size, std::size_t right_size);

  std::size_t size(Side side) const noexcept {
    return side == Side::Left ? left_.size() : right_.size();
  }
  Mask all(Side side) const noexcept;

  void add_edge(std::size_t left, std::size_t right);
  bool adjacent(std::size_t left, std::size_t right) const noexcept;

  // N(w) for a single vertex on `side`; the result is a mask on the other side.
  Mask neighbors_of(Side side, std::size_t vertex) const noexcept;
  // N(W) for a set of vertices on `side`.
  Mask neighbors(Side side, Mask vertices) const noexcept;

 private:
  std::vector<Mask> left_;
  std::vector<Mask> right_;
};

// G(C): left side = cl(C) in rep.closure order, right side = pr(C) in
// rep.profile order; alpha ~ (p,I) iff I is the p-interval of alpha.
BipartiteGraph class_graph(const ClassRep& rep);

// All subsets Y of the side opposite to `target` with X a subset of N(Y) and
// no proper subset of Y covering X. X defaults to the whole target side.
// Results are masks in increasing numeric order. Throws LimitExceeded when the
// searched side exceeds limits.minimal_sets_cap.
std::vector<BipartiteGraph::Mask> minimal_sets(const BipartiteGraph& graph, Side target,
                                               const Limits& limits = {});
std::vector<BipartiteGraph::Mask> minimal_sets(const BipartiteGraph& graph, Side target,
                                               BipartiteGraph::Mask x, const Limits& limits = {});

// sum over S on `side` with N(S) = the whole other side of (-1)^{|S|}.
Count covering_alternating_sum(const BipartiteGraph& graph, Side side, const Limits& limits = {});

}  // namespace ferrers
