#include "downcolor/undirected_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "downcolor/error.hpp"

namespace downcolor {

UndirectedGraph::UndirectedGraph(std::size_t vertex_count, const std::vector<Edge> &edges)
    : adjacency_(vertex_count) {
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw InvalidArgument("edge endpoint out of range: {" + std::to_string(u) + "," +
                            std::to_string(v) + "}");
    if (u == v)
      throw InvalidArgument("self-loop on vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto &adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    edge_count_ += adj.size();
  }
  edge_count_ /= 2;
}

bool UndirectedGraph::adjacent(VertexId u, VertexId v) const {
  const auto &adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<UndirectedGraph::Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

bool UndirectedGraph::is_complete() const noexcept {
  const std::size_t n = adjacency_.size();
  return edge_count_ == n * (n == 0 ? 0 : n - 1) / 2;
}

bool UndirectedGraph::is_forest() const {
  // A forest has exactly n - c edges for c components.
  std::vector<VertexId> parent(adjacency_.size());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges()) {
    const VertexId ru = find(u), rv = find(v);
    if (ru == rv)
      return false;
    parent[ru] = rv;
  }
  return true;
}

bool UndirectedGraph::is_connected() const {
  if (adjacency_.empty())
    return true;
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adjacency_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == adjacency_.size();
}

DegeneracyResult degeneracy(const UndirectedGraph &g) {
  const std::size_t n = g.vertex_count();
  DegeneracyResult result;
  result.elimination_order.reserve(n);

  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    result.value = std::max(result.value, d);
    result.elimination_order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (removed[w])
        continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return result;
}

} // namespace downcolor
