#include "downcolor/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "downcolor/error.hpp"

namespace downcolor {

namespace {

// Smallest color in 1.. that no already-colored neighbor uses.
Color smallest_free(const std::vector<VertexId> &neighbors, const std::vector<Color> &colors,
                    std::vector<char> &scratch) {
  scratch.assign(neighbors.size() + 2, 0);
  for (VertexId w : neighbors)
    if (colors[w] != 0 && colors[w] < scratch.size())
      scratch[colors[w]] = 1;
  Color c = 1;
  while (scratch[c])
    ++c;
  return c;
}

Color max_color(const std::vector<Color> &colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

// Greedy clique: from each start vertex, repeatedly add the candidate of
// largest degree that is adjacent to every member so far.
std::vector<VertexId> greedy_clique(const UndirectedGraph &g) {
  std::vector<VertexId> best;
  const std::size_t n = g.vertex_count();
  for (VertexId start = 0; start < n; ++start) {
    if (g.degree(start) + 1 <= best.size())
      continue;
    std::vector<VertexId> clique{start};
    std::vector<VertexId> candidates = g.neighbors(start);
    while (!candidates.empty()) {
      const VertexId pick = *std::max_element(
          candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a > b;
          });
      clique.push_back(pick);
      std::erase_if(candidates, [&](VertexId c) { return c == pick || !g.adjacent(pick, c); });
    }
    if (clique.size() > best.size())
      best = std::move(clique);
  }
  return best;
}

class Dsatur {
public:
  Dsatur(const UndirectedGraph &g, Color upper, std::uint64_t budget)
      : g_(g), n_(g.vertex_count()), colors_(n_, 0), uses_(n_, std::vector<std::uint32_t>(upper + 2, 0)),
        saturation_(n_, 0), best_k_(upper), budget_(budget) {}

  void precolor(const std::vector<VertexId> &clique) {
    for (VertexId v : clique)
      assign(v, ++used_);
    colored_ = clique.size();
  }

  // Returns false if the budget ran out.
  bool run(Color target) {
    target_ = target;
    search();
    return !aborted_;
  }

  Color best_k() const noexcept { return best_k_; }
  const std::vector<Color> &best() const noexcept { return best_; }

private:
  void assign(VertexId v, Color c) {
    colors_[v] = c;
    for (VertexId w : g_.neighbors(v))
      if (uses_[w][c]++ == 0)
        ++saturation_[w];
  }

  void unassign(VertexId v) {
    const Color c = colors_[v];
    colors_[v] = 0;
    for (VertexId w : g_.neighbors(v))
      if (--uses_[w][c] == 0)
        --saturation_[w];
  }

  VertexId select() const {
    VertexId pick = 0;
    bool found = false;
    std::size_t pick_sat = 0, pick_deg = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (colors_[v] != 0)
        continue;
      std::size_t deg = 0;
      for (VertexId w : g_.neighbors(v))
        deg += colors_[w] == 0;
      if (!found || saturation_[v] > pick_sat ||
          (saturation_[v] == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = saturation_[v];
        pick_deg = deg;
        found = true;
      }
    }
    return pick;
  }

  void search() {
    if (aborted_ || best_k_ <= target_)
      return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (colored_ == n_) {
      best_k_ = used_;
      best_ = colors_;
      return;
    }
    const VertexId v = select();
    const Color limit = std::min<Color>(used_ + 1, best_k_ - 1);
    for (Color c = 1; c <= limit; ++c) {
      if (uses_[v][c] != 0)
        continue;
      const Color saved_used = used_;
      used_ = std::max(used_, c);
      assign(v, c);
      ++colored_;
      search();
      --colored_;
      unassign(v);
      used_ = saved_used;
      if (aborted_ || best_k_ <= target_)
        return;
    }
  }

  const UndirectedGraph &g_;
  std::size_t n_;
  std::vector<Color> colors_;
  std::vector<std::vector<std::uint32_t>> uses_;
  std::vector<std::size_t> saturation_;
  std::vector<Color> best_;
  Color best_k_;
  Color used_ = 0;
  Color target_ = 0;
  std::size_t colored_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
  bool aborted_ = false;
};

} // namespace

std::string_view to_string(ColoringMethod method) {
  switch (method) {
  case ColoringMethod::greedy:
    return "greedy";
  case ColoringMethod::exact:
    return "exact";
  case ColoringMethod::inexact:
    return "inexact";
  }
  return "greedy";
}

ColoringMethod parse_coloring_method(std::string_view name) {
  if (name == "greedy")
    return ColoringMethod::greedy;
  if (name == "exact")
    return ColoringMethod::exact;
  if (name == "inexact")
    return ColoringMethod::inexact;
  throw InvalidArgument("unknown coloring method '" + std::string(name) + "'");
}

void normalize_colors(Coloring &c) {
  std::map<Color, Color> renumber;
  for (Color &color : c.colors) {
    auto [it, inserted] = renumber.emplace(color, static_cast<Color>(renumber.size() + 1));
    color = it->second;
  }
  c.k = static_cast<Color>(renumber.size());
}

Coloring greedy_color(const UndirectedGraph &g) {
  const auto order = degeneracy(g).elimination_order;
  Coloring c;
  c.colors.assign(g.vertex_count(), 0);
  std::vector<char> scratch;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    c.colors[*it] = smallest_free(g.neighbors(*it), c.colors, scratch);
  c.k = max_color(c.colors);
  c.lower_bound = 0;
  c.method = ColoringMethod::greedy;
  return c;
}

ExactResult exact_color(const UndirectedGraph &g, const ExactOptions &options) {
  const std::size_t n = g.vertex_count();
  ExactResult result;
  result.witness.method = ColoringMethod::exact;
  if (n == 0) {
    result.exact = true;
    return result;
  }
  if (g.is_complete()) {
    result.witness.colors.resize(n);
    std::iota(result.witness.colors.begin(), result.witness.colors.end(), Color{1});
    result.witness.k = result.witness.lower_bound = static_cast<Color>(n);
    result.lower = result.upper = static_cast<Color>(n);
    result.exact = true;
    return result;
  }
  if (n > options.vertex_cap)
    throw CapExceeded("exact coloring: " + std::to_string(n) + " vertices exceed the cap of " +
                      std::to_string(options.vertex_cap));

  Coloring incumbent = greedy_color(g);
  const auto clique = greedy_clique(g);
  const auto lower = static_cast<Color>(clique.size());

  bool finished = true;
  if (incumbent.k > lower) {
    Dsatur search(g, incumbent.k, options.node_budget);
    search.precolor(clique);
    finished = search.run(lower);
    if (search.best_k() < incumbent.k) {
      incumbent.colors = search.best();
      incumbent.k = search.best_k();
    }
  }

  result.exact = finished;
  result.upper = incumbent.k;
  result.lower = finished ? incumbent.k : lower;
  result.witness = std::move(incumbent);
  result.witness.method = finished ? ColoringMethod::exact : ColoringMethod::inexact;
  result.witness.lower_bound = result.lower;
  return result;
}

Coloring greedy_strong_coloring(const Hypergraph &h) { return greedy_color(clique_graph(h)); }

ExactResult exact_strong_chromatic(const Hypergraph &h, const ExactOptions &options) {
  return exact_color(clique_graph(h), options);
}

bool is_proper_coloring(const UndirectedGraph &g, const Coloring &c) {
  if (c.colors.size() != g.vertex_count())
    return false;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v])
      return false;
  return std::all_of(c.colors.begin(), c.colors.end(),
                     [&](Color col) { return col >= 1 && col <= c.k; });
}

bool verify_strong_coloring(const Hypergraph &h, const Coloring &c) {
  return is_proper_coloring(clique_graph(h), c);
}

Coloring down_coloring(const Digraph &g, DownColoringMode mode, const ExactOptions &options) {
  require_acyclic(g);
  const std::size_t n = g.vertex_count();
  const Hypergraph h = down_hypergraph(g, /*closed=*/false);

  Coloring inner;
  if (mode == DownColoringMode::greedy) {
    inner = greedy_strong_coloring(h);
  } else {
    inner = exact_strong_chromatic(h, options).witness;
  }

  Coloring c;
  c.colors.assign(n, 0);
  c.method = inner.method;
  {
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v)
      if (!g.predecessors(v).empty())
        c.colors[v] = inner.colors[next++];
  }

  std::vector<char> scratch;
  ReachabilityWalker reach(g);
  for (VertexId w : g.ids_by_label()) {
    if (!g.predecessors(w).empty())
      continue;
    const auto below = reach.from(w);
    scratch.assign(below.size() + 2, 0);
    for (std::size_t i = 1; i < below.size(); ++i)
      if (const VertexId v = below[i]; c.colors[v] < scratch.size())
        scratch[c.colors[v]] = 1;
    Color color = 1;
    while (scratch[color])
      ++color;
    c.colors[w] = color;
  }
  c.k = max_color(c.colors);

  if (c.method == ColoringMethod::inexact) {
    // Any down-coloring restricts to a strong coloring of H_G, and D is a
    // lower bound of its own.
    c.lower_bound = std::max<Color>(inner.lower_bound, static_cast<Color>(big_d(g)));
    if (c.lower_bound >= c.k) {
      c.lower_bound = c.k;
      c.method = ColoringMethod::exact;
    }
  } else {
    c.lower_bound = c.method == ColoringMethod::exact ? c.k : 0;
  }
  return c;
}

std::optional<ColoringViolation> find_down_coloring_violation(const Digraph &g,
                                                              const Coloring &c) {
  require_acyclic(g);
  const std::size_t n = g.vertex_count();
  if (c.colors.size() != n)
    throw InvalidArgument("coloring covers " + std::to_string(c.colors.size()) + " of " +
                          std::to_string(n) + " vertices");
  for (VertexId v = 0; v < n; ++v)
    if (c.colors[v] == 0)
      throw InvalidArgument("vertex '" + g.label(v) + "' is uncolored");

  std::map<Color, VertexId> owner;
  ReachabilityWalker reach(g);
  for (VertexId w = 0; w < n; ++w) {
    if (!g.predecessors(w).empty())
      continue;
    owner.clear();
    for (VertexId v : reach.from(w)) {
      auto [it, inserted] = owner.emplace(c.colors[v], v);
      if (!inserted)
        return ColoringViolation{it->second, v, w};
    }
  }
  return std::nullopt;
}

bool verify_down_coloring(const Digraph &g, const Coloring &c) {
  return !find_down_coloring_violation(g, c).has_value();
}

BoundReport bound_report(const Digraph &g) {
  require_acyclic(g);
  if (g.edge_count() == 0)
    throw InvalidArgument("bound report needs at least one edge");
  const Hypergraph h = down_hypergraph(g, /*closed=*/false);
  BoundReport report;
  report.big_d = big_d(g);
  report.ind_h = degeneracy(h).value;
  report.sigma_h = h.sigma();
  report.lower_bound = report.big_d;
  report.cor1_bound =
      report.ind_h <= 1 ? report.big_d : report.ind_h * (report.big_d - 2) + 1;
  return report;
}

std::string coloring_to_json(const Digraph &g, const Coloring &c) {
  nlohmann::json doc;
  doc["k"] = c.k;
  doc["method"] = std::string(to_string(c.method));
  if (c.method == ColoringMethod::inexact)
    doc["lower_bound"] = c.lower_bound;
  nlohmann::json colors = nlohmann::json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    colors[g.label(v)] = c.colors.at(v);
  doc["colors"] = std::move(colors);
  return doc.dump(2) + "\n";
}

Coloring coloring_from_json(const Digraph &g, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw InvalidArgument(std::string("coloring JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("colors") ||
      !doc["k"].is_number_unsigned() || !doc["colors"].is_object())
    throw InvalidArgument("coloring JSON: expected {\"k\": n, \"colors\": {...}}");

  Coloring c;
  c.k = doc["k"].get<Color>();
  c.method = doc.contains("method") ? parse_coloring_method(doc["method"].get<std::string>())
                                    : ColoringMethod::greedy;
  c.colors.assign(g.vertex_count(), 0);
  for (const auto &[label, value] : doc["colors"].items()) {
    const auto v = g.find(label);
    if (!v)
      throw InvalidArgument("coloring JSON: unknown vertex '" + label + "'");
    if (!value.is_number_unsigned() || value.get<Color>() == 0 || value.get<Color>() > c.k)
      throw InvalidArgument("coloring JSON: color of '" + label + "' is outside 1.." +
                            std::to_string(c.k));
    c.colors[*v] = value.get<Color>();
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (c.colors[v] == 0)
      throw InvalidArgument("coloring JSON: vertex '" + g.label(v) + "' has no color");
  c.lower_bound = doc.contains("lower_bound") ? doc["lower_bound"].get<Color>()
                  : c.method == ColoringMethod::exact ? c.k
                                                      : 0;
  return c;
}

} // namespace downcolor
