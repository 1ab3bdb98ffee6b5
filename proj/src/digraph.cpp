#include "downcolor/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <set>

#include "downcolor/error.hpp"

namespace downcolor {

namespace {

std::string join_cycle(const std::vector<std::string> &cycle) {
  std::string out;
  for (const auto &label : cycle) {
    if (!out.empty())
      out += " -> ";
    out += label;
  }
  return out;
}

bool valid_label(std::string_view label) {
  if (label.empty())
    return false;
  return std::none_of(label.begin(), label.end(),
                      [](unsigned char c) { return std::isspace(c) != 0; });
}

} // namespace

CycleError::CycleError(std::vector<std::string> cycle)
    : Error("digraph is not acyclic; cycle: " + join_cycle(cycle)), cycle_(std::move(cycle)) {}

std::vector<VertexId> ReachabilityWalker::from(VertexId start) {
  ++epoch_;
  std::vector<VertexId> found{start};
  stamp_[start] = epoch_;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (VertexId w : g_.successors(found[i]))
      if (stamp_[w] != epoch_) {
        stamp_[w] = epoch_;
        found.push_back(w);
      }
  return found;
}

Digraph::Digraph(std::vector<std::string> labels, const std::vector<Edge> &edges)
    : labels_(std::move(labels)), out_(labels_.size()), in_(labels_.size()) {
  index_.reserve(labels_.size());
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (!valid_label(labels_[v]))
      throw InvalidArgument("invalid vertex label '" + labels_[v] + "'");
    if (!index_.emplace(labels_[v], v).second)
      throw InvalidArgument("duplicate vertex label '" + labels_[v] + "'");
  }
  const std::size_t n = labels_.size();
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidArgument("edge endpoint out of range");
    if (u == v)
      throw InvalidArgument("self-loop on '" + labels_[u] + "'");
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto &out = out_[v];
    std::sort(out.begin(), out.end());
    if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end())
      throw InvalidArgument("duplicate edge " + labels_[v] + " -> " + labels_[*dup]);
    std::sort(in_[v].begin(), in_[v].end());
  }
  edge_count_ = edges.size();
}

std::optional<VertexId> Digraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

VertexId Digraph::id(std::string_view label) const {
  if (auto v = find(label))
    return *v;
  throw InvalidArgument("unknown vertex '" + std::string(label) + "'");
}

bool Digraph::has_edge(VertexId u, VertexId v) const {
  const auto &out = out_.at(u);
  return std::binary_search(out.begin(), out.end(), v);
}

std::vector<Digraph::Edge> Digraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < out_.size(); ++u)
    for (VertexId v : out_[u])
      out.emplace_back(u, v);
  return out;
}

std::vector<VertexId> Digraph::ids_by_label() const {
  std::vector<VertexId> ids(labels_.size());
  for (VertexId v = 0; v < ids.size(); ++v)
    ids[v] = v;
  std::sort(ids.begin(), ids.end(),
            [this](VertexId a, VertexId b) { return labels_[a] < labels_[b]; });
  return ids;
}

Digraph parse_digraph(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Digraph::Edge> edges;
  std::set<Digraph::Edge> seen;

  auto intern = [&](const std::string &label) {
    auto [it, inserted] = index.emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted)
      labels.push_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::istringstream tokens{std::string(line)};
    std::vector<std::string> words;
    for (std::string w; tokens >> w;)
      words.push_back(std::move(w));

    if (words.empty())
      continue;
    if (words.size() > 2)
      throw ParseError(line_no, "expected 'u v' or 'u', got " + std::to_string(words.size()) +
                                    " tokens");
    const VertexId u = intern(words[0]);
    if (words.size() == 1)
      continue;
    if (words[0] == words[1])
      throw ParseError(line_no, "self-loop on '" + words[0] + "'");
    const VertexId v = intern(words[1]);
    if (!seen.emplace(u, v).second)
      throw ParseError(line_no, "duplicate edge " + words[0] + " " + words[1]);
    edges.emplace_back(u, v);
  }
  return Digraph(std::move(labels), edges);
}

Digraph read_digraph(std::istream &in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_digraph(buffer.str());
}

std::string to_edge_list(const Digraph &g) {
  std::vector<std::pair<std::string_view, std::string_view>> pairs;
  pairs.reserve(g.edge_count());
  for (auto [u, v] : g.edges())
    pairs.emplace_back(g.label(u), g.label(v));
  std::sort(pairs.begin(), pairs.end());

  std::string out;
  for (auto [a, b] : pairs) {
    out += a;
    out += ' ';
    out += b;
    out += '\n';
  }
  for (VertexId v : g.ids_by_label())
    if (g.successors(v).empty() && g.predecessors(v).empty()) {
      out += g.label(v);
      out += '\n';
    }
  return out;
}

bool same_labeled_digraph(const Digraph &a, const Digraph &b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  for (VertexId v = 0; v < a.vertex_count(); ++v)
    if (!b.find(a.label(v)))
      return false;
  for (auto [u, v] : a.edges())
    if (!b.has_edge(b.id(a.label(u)), b.id(a.label(v))))
      return false;
  return true;
}

std::optional<std::vector<VertexId>> find_cycle(const Digraph &g) {
  const std::size_t n = g.vertex_count();
  enum : char { white, grey, black };
  std::vector<char> state(n, white);
  // Explicit DFS stack of (vertex, next successor index).
  std::vector<std::pair<VertexId, std::size_t>> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (state[root] != white)
      continue;
    stack.emplace_back(root, 0);
    state[root] = grey;
    while (!stack.empty()) {
      auto &[v, next] = stack.back();
      const auto &succ = g.successors(v);
      if (next == succ.size()) {
        state[v] = black;
        stack.pop_back();
        continue;
      }
      const VertexId w = succ[next++];
      if (state[w] == grey) {
        std::vector<VertexId> cycle;
        auto it = std::find_if(stack.begin(), stack.end(),
                               [w](const auto &frame) { return frame.first == w; });
        for (; it != stack.end(); ++it)
          cycle.push_back(it->first);
        return cycle;
      }
      if (state[w] == white) {
        state[w] = grey;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic(const Digraph &g) { return !find_cycle(g).has_value(); }

void require_acyclic(const Digraph &g) {
  if (auto cycle = find_cycle(g)) {
    std::vector<std::string> labels;
    for (VertexId v : *cycle)
      labels.push_back(g.label(v));
    labels.push_back(labels.front());
    throw CycleError(std::move(labels));
  }
}

std::vector<VertexId> topological_order(const Digraph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n);
  std::vector<VertexId> order;
  order.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    indeg[v] = g.predecessors(v).size();
    if (indeg[v] == 0)
      order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId w : g.successors(order[i]))
      if (--indeg[w] == 0)
        order.push_back(w);
  if (order.size() != n)
    require_acyclic(g);
  return order;
}

std::vector<std::vector<VertexId>> strongly_connected_components(const Digraph &g) {
  // Iterative Tarjan.
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> scc_stack;
  std::vector<std::pair<VertexId, std::size_t>> call;
  std::vector<std::vector<VertexId>> components;
  std::size_t counter = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != unvisited)
      continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto &[v, next] = call.back();
      if (next == 0 && index[v] == unvisited) {
        index[v] = low[v] = counter++;
        scc_stack.push_back(v);
        on_stack[v] = 1;
      }
      const auto &succ = g.successors(v);
      if (next < succ.size()) {
        const VertexId w = succ[next++];
        if (index[w] == unvisited)
          call.emplace_back(w, 0);
        else if (on_stack[w])
          low[v] = std::min(low[v], index[w]);
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<VertexId> component;
        VertexId w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      const VertexId finished = v;
      call.pop_back();
      if (!call.empty()) {
        const VertexId parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return components;
}

Digraph condense_to_acyclic(const Digraph &g) {
  const auto components = strongly_connected_components(g);
  std::vector<VertexId> rep(g.vertex_count());
  std::set<Digraph::Edge> edges;
  for (const auto &component : components) {
    const VertexId r = *std::min_element(
        component.begin(), component.end(),
        [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
    for (VertexId v : component) {
      rep[v] = r;
      if (v != r)
        edges.emplace(r, v);
    }
  }
  for (auto [u, v] : g.edges())
    if (rep[u] != rep[v])
      edges.emplace(rep[u], rep[v]);
  return Digraph(g.labels(), std::vector<Digraph::Edge>(edges.begin(), edges.end()));
}

VertexSet down_set(const Digraph &g, VertexId u, bool closed) {
  if (u >= g.vertex_count())
    throw InvalidArgument("vertex id " + std::to_string(u) + " out of range");
  require_acyclic(g);
  auto found = ReachabilityWalker(g).from(u);
  if (!closed)
    found.erase(found.begin());
  return VertexSet(std::move(found));
}

VertexSet max_vertices(const Digraph &g) {
  require_acyclic(g);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.predecessors(v).empty())
      out.push_back(v);
  return VertexSet(std::move(out));
}

std::size_t big_d(const Digraph &g) {
  require_acyclic(g);
  ReachabilityWalker reach(g);
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.predecessors(v).empty())
      best = std::max(best, reach.from(v).size());
  return best;
}

std::size_t poset_height(const Digraph &g) {
  const auto order = topological_order(g);
  std::vector<std::size_t> longest(g.vertex_count(), 1);
  std::size_t best = 0;
  for (VertexId v : order) {
    best = std::max(best, longest[v]);
    for (VertexId w : g.successors(v))
      longest[w] = std::max(longest[w], longest[v] + 1);
  }
  return best;
}

Digraph height_two_reduction(const Digraph &g) {
  require_acyclic(g);
  ReachabilityWalker reach(g);
  std::vector<Digraph::Edge> edges;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (!g.predecessors(u).empty())
      continue;
    auto below = reach.from(u);
    for (std::size_t i = 1; i < below.size(); ++i)
      edges.emplace_back(u, below[i]);
  }
  return Digraph(g.labels(), edges);
}

Digraph transitive_closure(const Digraph &g) {
  require_acyclic(g);
  ReachabilityWalker reach(g);
  std::vector<Digraph::Edge> edges;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto below = reach.from(u);
    for (std::size_t i = 1; i < below.size(); ++i)
      edges.emplace_back(u, below[i]);
  }
  return Digraph(g.labels(), edges);
}

UndirectedGraph down_graph(const Digraph &g) {
  require_acyclic(g);
  ReachabilityWalker reach(g);
  std::vector<UndirectedGraph::Edge> pairs;
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (!g.predecessors(w).empty())
      continue;
    const auto below = reach.from(w);
    for (std::size_t i = 0; i < below.size(); ++i)
      for (std::size_t j = i + 1; j < below.size(); ++j)
        pairs.emplace_back(below[i], below[j]);
  }
  return UndirectedGraph(g.vertex_count(), pairs);
}

} // namespace downcolor
