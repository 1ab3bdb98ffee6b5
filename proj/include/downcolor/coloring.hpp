#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "downcolor/digraph.hpp"
#include "downcolor/hypergraph.hpp"
#include "downcolor/undirected_graph.hpp"

namespace downcolor {

using Color = std::uint32_t;

enum class ColoringMethod {
  greedy,
  exact,
  // Exact search stopped on its budget; k is the best coloring found and
  // lower_bound is what was proven.
  inexact,
};

std::string_view to_string(ColoringMethod method);
ColoringMethod parse_coloring_method(std::string_view name);

// Total map vertex id -> color in 1..k, every color used.
struct Coloring {
  std::vector<Color> colors;
  Color k = 0;
  ColoringMethod method = ColoringMethod::greedy;
  Color lower_bound = 0;

  Color operator[](VertexId v) const { return colors.at(v); }
  std::size_t size() const noexcept { return colors.size(); }
};

// Renumbers colors by first appearance (vertex id order) so that 1..k are
// all used, and fills in k.
void normalize_colors(Coloring &c);

struct ExactOptions {
  // Vertex cap on the instance; larger inputs throw CapExceeded unless the
  // graph is complete.
  std::size_t vertex_cap = 30;
  // Branch-and-bound node budget.
  std::uint64_t node_budget = 50'000'000;
};

// Outcome of an exact search: [lower, upper] brackets the chromatic number,
// with lower == upper when `exact`.
struct ExactResult {
  Color lower = 0;
  Color upper = 0;
  bool exact = false;
  Coloring witness;

  Color value() const noexcept { return upper; }
};

// Graph coloring in reverse degeneracy order, smallest free color first.
// Uses at most degeneracy(g).value + 1 colors.
Coloring greedy_color(const UndirectedGraph &g);

// DSATUR branch and bound.
ExactResult exact_color(const UndirectedGraph &g, const ExactOptions &options = {});

// Greedy coloring of the clique graph: at most ind(h)(sigma(h) - 1) + 1
// colors.
Coloring greedy_strong_coloring(const Hypergraph &h);

ExactResult exact_strong_chromatic(const Hypergraph &h, const ExactOptions &options = {});

bool is_proper_coloring(const UndirectedGraph &g, const Coloring &c);
bool verify_strong_coloring(const Hypergraph &h, const Coloring &c);

enum class DownColoringMode { greedy, exact };

// Colors H_G (open down-hypergraph), then gives each maximal vertex, in
// label order, the smallest color absent from its open down-set.
Coloring down_coloring(const Digraph &g, DownColoringMode mode, const ExactOptions &options = {});

// Two distinct vertices that share a color and a common ancestor.
struct ColoringViolation {
  VertexId first;
  VertexId second;
  VertexId ancestor;
};

// Throws InvalidArgument for a coloring that is not total on g.
std::optional<ColoringViolation> find_down_coloring_violation(const Digraph &g,
                                                              const Coloring &c);
bool verify_down_coloring(const Digraph &g, const Coloring &c);

struct BoundReport {
  std::size_t big_d = 0;
  std::size_t ind_h = 0;
  std::size_t sigma_h = 0;
  std::size_t cor1_bound = 0;
  std::size_t lower_bound = 0;
};

// Upper bound on the down-chromatic number from the degeneracy of H_G:
// D when ind(H_G) <= 1, else ind(H_G)(D - 2) + 1. Lower bound is D.
// Requires at least one edge.
BoundReport bound_report(const Digraph &g);

// Coloring JSON document: {"k": .., "method": "..", "colors": {label: color}}.
std::string coloring_to_json(const Digraph &g, const Coloring &c);
Coloring coloring_from_json(const Digraph &g, std::string_view json);

} // namespace downcolor
