#pragma once

#include <utility>
#include <vector>

#include "downcolor/vertex_set.hpp"

namespace downcolor {

// Simple undirected graph on ids 0..n-1. Adjacency lists are kept sorted.
class UndirectedGraph {
public:
  using Edge = std::pair<VertexId, VertexId>;

  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}
  // Duplicate pairs (in either orientation) are merged; self-loops and
  // out-of-range endpoints throw InvalidArgument.
  UndirectedGraph(std::size_t vertex_count, const std::vector<Edge> &edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<VertexId> &neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  // Every edge once as (min, max), sorted.
  std::vector<Edge> edges() const;

  bool is_complete() const noexcept;
  // True iff the graph has no cycle (a forest).
  bool is_forest() const;
  bool is_connected() const;

  friend bool operator==(const UndirectedGraph &, const UndirectedGraph &) = default;

private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Degeneracy value plus the peeling order that witnesses it: each vertex has
// at most `value` neighbors (or non-trivial edges, for hypergraphs) among the
// vertices still present when it is removed.
struct DegeneracyResult {
  std::size_t value = 0;
  std::vector<VertexId> elimination_order;
};

// Min-degree peeling, ties to the smallest id.
DegeneracyResult degeneracy(const UndirectedGraph &g);

} // namespace downcolor
