#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "downcolor/digraph.hpp"
#include "downcolor/undirected_graph.hpp"
#include "downcolor/vertex_set.hpp"

namespace downcolor {

// Hypergraph on ids 0..n-1 with a (possibly multi-) list of edges. Each edge
// is a sorted, duplicate-free id list. Edges of cardinality < 2 are allowed
// here ("trivial"); simplified() drops them and merges repeats.
class Hypergraph {
public:
  using HyperEdge = std::vector<VertexId>;

  Hypergraph() = default;
  // Labels default to "v0", "v1", ... when `labels` is empty. Throws
  // InvalidArgument on out-of-range members or bad/duplicate labels.
  Hypergraph(std::size_t vertex_count, std::vector<HyperEdge> edges,
             std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<HyperEdge> &edges() const noexcept { return edges_; }
  const HyperEdge &edge(std::size_t i) const { return edges_.at(i); }
  // Indices of the edges containing v.
  const std::vector<std::size_t> &incident(VertexId v) const { return incidence_.at(v); }

  // Largest edge cardinality (0 without edges).
  std::size_t sigma() const noexcept { return sigma_; }

  const std::string &label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string> &labels() const noexcept { return labels_; }

  // No repeated edges and every edge has at least two members.
  bool is_simple() const;
  Hypergraph simplified() const;

  friend bool operator==(const Hypergraph &a, const Hypergraph &b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<HyperEdge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::size_t sigma_ = 0;
};

// Same vertex labels and the same multiset of edges (by label), regardless
// of id or edge order.
bool same_labeled_hypergraph(const Hypergraph &a, const Hypergraph &b);

// Hypergraph text: one edge per line as whitespace-separated labels, '#'
// comments. A single-token line declares a vertex without adding an edge.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(std::istream &in);
std::string to_hypergraph_text(const Hypergraph &h);

// Open form: vertices V \ max, edges D(u) for maximal u. Closed form: all
// vertices, edges D[u]. With `simplify`, edges below two members are dropped
// and repeats merged. Vertex ids follow the digraph's id order.
Hypergraph down_hypergraph(const Digraph &g, bool closed, bool simplify = true);

// Height-two digraph: h's vertices first (same ids), then one fresh source
// per edge labelled w0, w1, ... pointing at the edge's members. Requires a
// simple h.
Digraph up_digraph(const Hypergraph &h);

// u ~ v iff they share an edge.
UndirectedGraph clique_graph(const Hypergraph &h);

// One vertex per edge; adjacent iff the edges intersect.
UndirectedGraph intersection_graph(const Hypergraph &h);

// H[S]: vertex i of the result is s[i]; edges are the intersections with at
// least two members, multiplicity kept.
Hypergraph induced_subhypergraph(const Hypergraph &h, const VertexSet &s);

// Number of edges with at least two members that contain u.
std::size_t degree(const Hypergraph &h, VertexId u);

// Minimum degree (0 for the empty hypergraph).
std::size_t min_degree(const Hypergraph &h);

// ind(H) by min-degree peeling, ties to the smallest id.
DegeneracyResult degeneracy(const Hypergraph &h);

} // namespace downcolor
