#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "downcolor/undirected_graph.hpp"
#include "downcolor/vertex_set.hpp"

namespace downcolor {

// Simple digraph with labeled vertices. An edge (u, v) means u is a parent
// of v, so v is a descendant of u.
//
// Labels are unique, non-empty and whitespace-free. Ids are dense, 0..n-1,
// and successor/predecessor lists are sorted by id.
class Digraph {
public:
  using Edge = std::pair<VertexId, VertexId>;

  Digraph() = default;
  // Throws InvalidArgument on a broken invariant (bad label, duplicate
  // label, self-loop, duplicate edge, out-of-range endpoint).
  Digraph(std::vector<std::string> labels, const std::vector<Edge> &edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  const std::string &label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;
  // Like find, but throws InvalidArgument for an unknown label.
  VertexId id(std::string_view label) const;

  const std::vector<VertexId> &successors(VertexId v) const { return out_.at(v); }
  const std::vector<VertexId> &predecessors(VertexId v) const { return in_.at(v); }
  bool has_edge(VertexId u, VertexId v) const;

  // Edges sorted by (source id, target id).
  std::vector<Edge> edges() const;

  // Ids sorted by label.
  std::vector<VertexId> ids_by_label() const;

  friend bool operator==(const Digraph &a, const Digraph &b) {
    return a.labels_ == b.labels_ && a.out_ == b.out_;
  }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::size_t edge_count_ = 0;
};

// Breadth-first walker for repeated reachability queries on one digraph.
// Does not check acyclicity.
class ReachabilityWalker {
public:
  explicit ReachabilityWalker(const Digraph &g) : g_(g), stamp_(g.vertex_count(), 0) {}

  // `start` first, then every vertex reachable from it.
  std::vector<VertexId> from(VertexId start);

private:
  const Digraph &g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

// Edge-list text: one "u v" edge or one "u" vertex declaration per line,
// '#' to end of line is a comment. Ids follow first appearance.
Digraph parse_digraph(std::string_view text);
Digraph read_digraph(std::istream &in);

// Inverse of parse_digraph up to id order: edges sorted by label pair,
// followed by single-token lines for isolated vertices.
std::string to_edge_list(const Digraph &g);

// Same-label-set comparison, independent of id assignment.
bool same_labeled_digraph(const Digraph &a, const Digraph &b);

// One directed cycle as a vertex sequence (first vertex not repeated), or
// nothing if g is acyclic.
std::optional<std::vector<VertexId>> find_cycle(const Digraph &g);
bool is_acyclic(const Digraph &g);

// Topological order, parents before children. Throws CycleError.
std::vector<VertexId> topological_order(const Digraph &g);

// Throws CycleError naming one cycle if g is cyclic.
void require_acyclic(const Digraph &g);

// Strongly connected components, each sorted by id; components listed in
// order of their smallest id.
std::vector<std::vector<VertexId>> strongly_connected_components(const Digraph &g);

// Equivalent acyclic digraph on the same labels: every strongly connected
// component collapses onto its lexicographically smallest label, which gets
// an edge to each other member; component-level edges join representatives.
Digraph condense_to_acyclic(const Digraph &g);

// D[u] (closed) or D(u) (open). Requires an acyclic g.
VertexSet down_set(const Digraph &g, VertexId u, bool closed);

// Vertices with in-degree 0.
VertexSet max_vertices(const Digraph &g);

// max |D[u]|, 0 for the empty digraph.
std::size_t big_d(const Digraph &g);

// Number of vertices on a longest directed path (0 for the empty digraph).
std::size_t poset_height(const Digraph &g);

// Edges {(u, v) : u maximal, v in D(u)}. Same down-graph, height at most two.
Digraph height_two_reduction(const Digraph &g);

Digraph transitive_closure(const Digraph &g);

// u ~ v iff u != v and both lie in D[w] for some maximal w.
UndirectedGraph down_graph(const Digraph &g);

} // namespace downcolor
