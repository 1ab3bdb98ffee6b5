#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "downcolor/coloring.hpp"
#include "downcolor/digraph.hpp"

namespace downcolor {

// Compacted transitive-closure table: one row per vertex (sorted by label),
// k columns indexed by color. Row u holds every descendant v of u (u
// included) in column color(v).
struct CompactMatrix {
  using Cell = std::optional<std::string>;

  std::size_t k = 0;
  std::vector<std::string> row_labels;
  std::vector<std::vector<Cell>> cells; // cells[row][column - 1]
  std::map<std::string, std::size_t> column; // label -> 1-based column

  friend bool operator==(const CompactMatrix &, const CompactMatrix &) = default;
};

struct CompressionStats {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t dense_cells = 0;   // n * n
  std::size_t compact_cells = 0; // n * k
  std::size_t filled_cells = 0;
  double fill_ratio = 0;         // filled / compact, 0 for an empty matrix
};

// Throws VerificationError naming the offending pair and their common
// ancestor if c is not a down-coloring of g.
CompactMatrix build_compact(const Digraph &g, const Coloring &c);

struct AcCheck {
  bool ok = true;
  // 0 when ok; otherwise the failed clause: 1 = a vertex sits in two
  // columns, 2 = a row differs from the vertex's closed down-set,
  // 3 = two vertices with a common ancestor share a column.
  int clause = 0;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

// Clauses are checked in the order 1, 3, 2.
AcCheck verify_ac_property(const CompactMatrix &m, const Digraph &g);

CompressionStats stats(const CompactMatrix &m);

// Closure edges (u, v), v != u, read back from the rows.
Digraph closure_from_matrix(const CompactMatrix &m);

// Columns reordered by their contents (each column compared as its list of
// cells top to bottom, empty cells first), so that matrices differing only
// by a column permutation become equal.
CompactMatrix canonical_columns(const CompactMatrix &m);

enum class MatrixFormat { csv, json };

// CSV: header "vertex,c1,...,ck", blank empty cells. JSON: {"k": k,
// "rows": {label: [label-or-null, ...]}}. Both byte-stable.
std::string serialize(const CompactMatrix &m, MatrixFormat format);
CompactMatrix parse_compact(std::string_view text, MatrixFormat format);

} // namespace downcolor
