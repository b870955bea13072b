#include "ferrers/bipartite.hpp"

#include <bit>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {
using Mask = BipartiteGraph::Mask;

Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
}  // namespace

BipartiteGraph::BipartiteGraph(std::size_t left_size, std::size_t right_size)
    : left_(left_size, 0), right_(right_size, 0) {
  if (left_size > 64 || right_size > 64) throw LimitExceeded("bipartite graphs are limited to 64 vertices per side");
}

Mask BipartiteGraph::all(Side side) const noexcept { return low_bits(size(side)); }

void BipartiteGraph::add_edge(std::size_t left, std::size_t right) {
  if (left >= left_.size() || right >= right_.size()) throw InvalidArgument("edge endpoint out of range");
  left_[left] |= Mask{1} << right;
  right_[right] |= Mask{1} << left;
}

bool BipartiteGraph::adjacent(std::size_t left, std::size_t right) const noexcept {
  return left < left_.size() && right < right_.size() && ((left_[left] >> right) & 1);
}

Mask BipartiteGraph::neighbors_of(Side side, std::size_t vertex) const noexcept {
  const auto& adj = side == Side::Left ? left_ : right_;
  return vertex < adj.size() ? adj[vertex] : 0;
}

Mask BipartiteGraph::neighbors(Side side, Mask vertices) const noexcept {
  Mask out = 0;
  while (vertices) {
    const auto v = static_cast<std::size_t>(std::countr_zero(vertices));
    out |= neighbors_of(side, v);
    vertices &= vertices - 1;
  }
  return out;
}

BipartiteGraph class_graph(const ClassRep& rep) {
  const auto& entries = rep.profile.entries();
  BipartiteGraph g(rep.closure.size(), entries.size());
  for (std::size_t a = 0; a < rep.closure.size(); ++a) {
    for (std::size_t e = 0; e < entries.size(); ++e) {
      auto iv = p_interval(rep.closure[a], entries[e].p);
      if (iv && *iv == entries[e].interval) g.add_edge(a, e);
    }
  }
  return g;
}

std::vector<Mask> minimal_sets(const BipartiteGraph& graph, Side target, const Limits& limits) {
  return minimal_sets(graph, target, graph.all(target), limits);
}

std::vector<Mask> minimal_sets(const BipartiteGraph& graph, Side target, Mask x, const Limits& limits) {
  const Side search = other(target);
  const std::size_t n = graph.size(search);
  if (n > limits.minimal_sets_cap || n >= 63)
    throw LimitExceeded("minimal_sets: " + std::to_string(n) + " candidate vertices exceed cap " +
                        std::to_string(limits.minimal_sets_cap));
  auto covers = [&](Mask y) { return (graph.neighbors(search, y) & x) == x; };
  std::vector<Mask> out;
  for (Mask y = 0; y <= low_bits(n); ++y) {
    if (!covers(y)) continue;
    // Covering is monotone, so minimality only needs the one-element removals.
    bool minimal = true;
    for (Mask rest = y; rest; rest &= rest - 1) {
      if (covers(y & ~(rest & -rest))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(y);
  }
  return out;
}

Count covering_alternating_sum(const BipartiteGraph& graph, Side side, const Limits& limits) {
  const std::size_t n = graph.size(side);
  if (n > limits.minimal_sets_cap || n >= 63)
    throw LimitExceeded("covering_alternating_sum: side of size " + std::to_string(n) + " exceeds cap");
  const Mask target = graph.all(other(side));
  Count sum = 0;
  for (Mask s = 0; s <= low_bits(n); ++s) {
    if (graph.neighbors(side, s) != target) continue;
    sum = checked_add(sum, std::popcount(s) % 2 == 0 ? 1 : -1);
  }
  return sum;
}

}  // namespace ferrers
