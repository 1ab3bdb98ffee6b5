#include "downcolor/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "downcolor/error.hpp"

namespace downcolor {

namespace {

bool valid_label(std::string_view label) {
  return !label.empty() && std::none_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

} // namespace

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<HyperEdge> edges,
                       std::vector<std::string> labels)
    : labels_(std::move(labels)), edges_(std::move(edges)), incidence_(vertex_count) {
  if (labels_.empty()) {
    labels_.reserve(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v)
      labels_.push_back("v" + std::to_string(v));
  }
  if (labels_.size() != vertex_count)
    throw InvalidArgument("hypergraph label count does not match vertex count");
  std::unordered_set<std::string_view> seen;
  for (const auto &label : labels_) {
    if (!valid_label(label))
      throw InvalidArgument("invalid vertex label '" + label + "'");
    if (!seen.insert(label).second)
      throw InvalidArgument("duplicate vertex label '" + label + "'");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto &e = edges_[i];
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (VertexId v : e) {
      if (v >= vertex_count)
        throw InvalidArgument("hyperedge member " + std::to_string(v) + " out of range");
      incidence_[v].push_back(i);
    }
    sigma_ = std::max(sigma_, e.size());
  }
}

bool Hypergraph::is_simple() const {
  if (std::any_of(edges_.begin(), edges_.end(), [](const auto &e) { return e.size() < 2; }))
    return false;
  std::set<HyperEdge> distinct(edges_.begin(), edges_.end());
  return distinct.size() == edges_.size();
}

Hypergraph Hypergraph::simplified() const {
  std::set<HyperEdge> seen;
  std::vector<HyperEdge> kept;
  for (const auto &e : edges_)
    if (e.size() >= 2 && seen.insert(e).second)
      kept.push_back(e);
  return Hypergraph(vertex_count(), std::move(kept), labels_);
}

bool same_labeled_hypergraph(const Hypergraph &a, const Hypergraph &b) {
  auto canonical = [](const Hypergraph &h) {
    std::multiset<std::vector<std::string>> out;
    for (const auto &e : h.edges()) {
      std::vector<std::string> names;
      for (VertexId v : e)
        names.push_back(h.label(v));
      std::sort(names.begin(), names.end());
      out.insert(std::move(names));
    }
    return out;
  };
  auto la = a.labels(), lb = b.labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb && canonical(a) == canonical(b);
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Hypergraph::HyperEdge> edges;

  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream tokens(line);
    Hypergraph::HyperEdge edge;
    for (std::string w; tokens >> w;) {
      auto [it, inserted] = index.emplace(w, static_cast<VertexId>(labels.size()));
      if (inserted)
        labels.push_back(w);
      if (std::find(edge.begin(), edge.end(), it->second) != edge.end())
        throw ParseError(line_no, "vertex '" + w + "' repeated within one edge");
      edge.push_back(it->second);
    }
    if (edge.size() >= 2)
      edges.push_back(std::move(edge));
  }
  const std::size_t n = labels.size();
  return Hypergraph(n, std::move(edges), std::move(labels));
}

Hypergraph read_hypergraph(std::istream &in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hypergraph(buffer.str());
}

std::string to_hypergraph_text(const Hypergraph &h) {
  std::string out;
  std::vector<char> covered(h.vertex_count(), 0);
  for (const auto &e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i)
        out += ' ';
      out += h.label(e[i]);
      covered[e[i]] = 1;
    }
    out += '\n';
  }
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (!covered[v])
      out += h.label(v) + '\n';
  return out;
}

Hypergraph down_hypergraph(const Digraph &g, bool closed, bool simplify) {
  require_acyclic(g);
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> new_id(n, 0);
  std::vector<std::string> labels;
  for (VertexId v = 0; v < n; ++v) {
    if (!closed && g.predecessors(v).empty())
      continue;
    new_id[v] = static_cast<VertexId>(labels.size());
    labels.push_back(g.label(v));
  }

  std::vector<Hypergraph::HyperEdge> edges;
  ReachabilityWalker reach(g);
  for (VertexId u = 0; u < n; ++u) {
    if (!g.predecessors(u).empty())
      continue;
    auto below = reach.from(u);
    if (!closed)
      below.erase(below.begin());
    if (below.empty())
      continue;
    Hypergraph::HyperEdge edge;
    edge.reserve(below.size());
    for (VertexId v : below)
      edge.push_back(new_id[v]);
    edges.push_back(std::move(edge));
  }
  const std::size_t vertex_count = labels.size();
  Hypergraph h(vertex_count, std::move(edges), std::move(labels));
  return simplify ? h.simplified() : h;
}

Digraph up_digraph(const Hypergraph &h) {
  if (!h.is_simple())
    throw InvalidArgument("up_digraph requires a simple hypergraph");
  std::vector<std::string> labels = h.labels();
  std::unordered_set<std::string> taken(labels.begin(), labels.end());
  std::vector<Digraph::Edge> edges;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::string name = "w" + std::to_string(i);
    while (taken.count(name))
      name += '\'';
    taken.insert(name);
    const auto source = static_cast<VertexId>(labels.size());
    labels.push_back(std::move(name));
    for (VertexId v : h.edge(i))
      edges.emplace_back(source, v);
  }
  return Digraph(std::move(labels), edges);
}

UndirectedGraph clique_graph(const Hypergraph &h) {
  std::vector<UndirectedGraph::Edge> pairs;
  for (const auto &e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        pairs.emplace_back(e[i], e[j]);
  return UndirectedGraph(h.vertex_count(), pairs);
}

UndirectedGraph intersection_graph(const Hypergraph &h) {
  std::vector<UndirectedGraph::Edge> pairs;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const auto &inc = h.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        pairs.emplace_back(static_cast<VertexId>(inc[i]), static_cast<VertexId>(inc[j]));
  }
  return UndirectedGraph(h.edge_count(), pairs);
}

Hypergraph induced_subhypergraph(const Hypergraph &h, const VertexSet &s) {
  std::vector<VertexId> new_id(h.vertex_count(), 0);
  std::vector<std::string> labels;
  for (VertexId v : s) {
    if (v >= h.vertex_count())
      throw InvalidArgument("vertex " + std::to_string(v) + " is not in the hypergraph");
    new_id[v] = static_cast<VertexId>(labels.size());
    labels.push_back(h.label(v));
  }
  std::vector<Hypergraph::HyperEdge> edges;
  for (const auto &e : h.edges()) {
    Hypergraph::HyperEdge cut;
    for (VertexId v : e)
      if (s.contains(v))
        cut.push_back(new_id[v]);
    if (cut.size() >= 2)
      edges.push_back(std::move(cut));
  }
  return Hypergraph(s.size(), std::move(edges), std::move(labels));
}

std::size_t degree(const Hypergraph &h, VertexId u) {
  if (u >= h.vertex_count())
    throw InvalidArgument("vertex id " + std::to_string(u) + " out of range");
  const auto &inc = h.incident(u);
  return static_cast<std::size_t>(std::count_if(
      inc.begin(), inc.end(), [&](std::size_t e) { return h.edge(e).size() >= 2; }));
}

std::size_t min_degree(const Hypergraph &h) {
  std::size_t best = 0;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const std::size_t d = degree(h, v);
    if (v == 0 || d < best)
      best = d;
  }
  return best;
}

DegeneracyResult degeneracy(const Hypergraph &h) {
  const std::size_t n = h.vertex_count();
  DegeneracyResult result;
  result.elimination_order.reserve(n);

  // Members of each edge still present; an edge counts towards degrees while
  // at least two remain.
  std::vector<std::size_t> alive(h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    alive[e] = h.edge(e).size();

  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = degree(h, v);
    queue.emplace(deg[v], v);
  }

  std::vector<char> removed(n, 0);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    result.value = std::max(result.value, d);
    result.elimination_order.push_back(v);
    for (std::size_t e : h.incident(v)) {
      if (--alive[e] != 1)
        continue;
      for (VertexId w : h.edge(e))
        if (!removed[w]) {
          queue.erase({deg[w], w});
          queue.emplace(--deg[w], w);
          break;
        }
    }
  }
  return result;
}

} // namespace downcolor
