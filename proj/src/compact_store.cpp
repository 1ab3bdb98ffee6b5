#include "downcolor/compact_store.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "downcolor/error.hpp"

namespace downcolor {

namespace {

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

// Splits one CSV record. Quoted fields may contain separators and doubled
// quotes; an unquoted empty field comes back as nullopt.
std::vector<std::optional<std::string>> csv_split(const std::string &line, std::size_t line_no) {
  std::vector<std::optional<std::string>> fields;
  std::size_t i = 0;
  while (true) {
    std::string field;
    bool quoted = false;
    if (i < line.size() && line[i] == '"') {
      quoted = true;
      ++i;
      while (true) {
        if (i >= line.size())
          throw ParseError(line_no, "unterminated quoted field");
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field += line[i++];
      }
      if (i < line.size() && line[i] != ',')
        throw ParseError(line_no, "text after closing quote");
    } else {
      while (i < line.size() && line[i] != ',')
        field += line[i++];
    }
    if (field.empty() && !quoted)
      fields.emplace_back(std::nullopt);
    else
      fields.emplace_back(std::move(field));
    if (i >= line.size())
      break;
    ++i; // comma
  }
  return fields;
}

// Fills `column` from the first occurrence of each label.
void derive_columns(CompactMatrix &m) {
  m.column.clear();
  for (const auto &row : m.cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c])
        m.column.emplace(*row[c], c + 1);
}

} // namespace

CompactMatrix build_compact(const Digraph &g, const Coloring &c) {
  if (auto bad = find_down_coloring_violation(g, c))
    throw VerificationError("not a down-coloring: '" + g.label(bad->first) + "' and '" +
                            g.label(bad->second) + "' share color " +
                            std::to_string(c.colors[bad->first]) + " below '" +
                            g.label(bad->ancestor) + "'");
  CompactMatrix m;
  m.k = c.k;
  ReachabilityWalker reach(g);
  for (VertexId u : g.ids_by_label()) {
    m.row_labels.push_back(g.label(u));
    std::vector<CompactMatrix::Cell> row(m.k);
    for (VertexId v : reach.from(u))
      row.at(c.colors[v] - 1) = g.label(v);
    m.cells.push_back(std::move(row));
    m.column.emplace(g.label(u), c.colors[u]);
  }
  return m;
}

AcCheck verify_ac_property(const CompactMatrix &m, const Digraph &g) {
  require_acyclic(g);
  auto fail = [](int clause, std::string why) { return AcCheck{false, clause, std::move(why)}; };

  // (i) one column per vertex.
  std::map<std::string, std::size_t> seen_column;
  for (std::size_t r = 0; r < m.cells.size(); ++r) {
    if (m.cells[r].size() != m.k)
      return fail(2, "row '" + m.row_labels[r] + "' has " + std::to_string(m.cells[r].size()) +
                         " cells, expected " + std::to_string(m.k));
    for (std::size_t c = 0; c < m.k; ++c) {
      if (!m.cells[r][c])
        continue;
      auto [it, inserted] = seen_column.emplace(*m.cells[r][c], c + 1);
      if (!inserted && it->second != c + 1)
        return fail(1, "'" + it->first + "' appears in columns " + std::to_string(it->second) +
                           " and " + std::to_string(c + 1));
    }
  }

  // (iii) vertices sharing a column have disjoint closed ancestor sets.
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> ancestors(n);
  ReachabilityWalker reach(g);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId d : reach.from(v))
      ancestors[d].push_back(v);
  std::map<std::size_t, std::vector<VertexId>> by_column;
  for (const auto &[label, column] : seen_column)
    if (auto v = g.find(label))
      by_column[column].push_back(*v);
  std::vector<std::int64_t> owner(n, -1);
  for (const auto &[column, members] : by_column) {
    std::fill(owner.begin(), owner.end(), -1);
    for (VertexId v : members)
      for (VertexId a : ancestors[v]) {
        if (owner[a] >= 0)
          return fail(3, "'" + g.label(static_cast<VertexId>(owner[a])) + "' and '" + g.label(v) +
                             "' share column " + std::to_string(column) +
                             " but have common ancestor '" + g.label(a) + "'");
        owner[a] = v;
      }
  }

  // (ii) row u holds exactly D[u].
  if (m.row_labels.size() != n)
    return fail(2, "matrix has " + std::to_string(m.row_labels.size()) + " rows for " +
                       std::to_string(n) + " vertices");
  std::set<std::string> listed;
  for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
    const auto &label = m.row_labels[r];
    const auto u = g.find(label);
    if (!u)
      return fail(2, "row '" + label + "' is not a vertex of the digraph");
    if (!listed.insert(label).second)
      return fail(2, "row '" + label + "' appears twice");
    std::set<std::string> expected, found;
    for (VertexId v : reach.from(*u))
      expected.insert(g.label(v));
    for (const auto &cell : m.cells[r])
      if (cell)
        found.insert(*cell);
    if (expected != found)
      return fail(2, "row '" + label + "' does not match its down-set");
  }
  return AcCheck{};
}

CompressionStats stats(const CompactMatrix &m) {
  CompressionStats s;
  s.n = m.row_labels.size();
  s.k = m.k;
  s.dense_cells = s.n * s.n;
  s.compact_cells = s.n * s.k;
  for (const auto &row : m.cells)
    s.filled_cells += static_cast<std::size_t>(
        std::count_if(row.begin(), row.end(), [](const auto &c) { return c.has_value(); }));
  s.fill_ratio = s.compact_cells == 0 ? 0.0
                                      : static_cast<double>(s.filled_cells) /
                                            static_cast<double>(s.compact_cells);
  return s;
}

Digraph closure_from_matrix(const CompactMatrix &m) {
  std::map<std::string, VertexId> index;
  for (std::size_t r = 0; r < m.row_labels.size(); ++r)
    index.emplace(m.row_labels[r], static_cast<VertexId>(r));
  std::vector<Digraph::Edge> edges;
  for (std::size_t r = 0; r < m.cells.size(); ++r)
    for (const auto &cell : m.cells[r]) {
      if (!cell || *cell == m.row_labels[r])
        continue;
      auto it = index.find(*cell);
      if (it == index.end())
        throw InvalidArgument("cell '" + *cell + "' has no row");
      edges.emplace_back(static_cast<VertexId>(r), it->second);
    }
  return Digraph(m.row_labels, edges);
}

CompactMatrix canonical_columns(const CompactMatrix &m) {
  std::vector<std::vector<CompactMatrix::Cell>> columns(m.k);
  for (std::size_t c = 0; c < m.k; ++c)
    for (const auto &row : m.cells)
      columns[c].push_back(row.at(c));
  std::vector<std::size_t> order(m.k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return columns[a] < columns[b]; });

  CompactMatrix out;
  out.k = m.k;
  out.row_labels = m.row_labels;
  out.cells.assign(m.cells.size(), std::vector<CompactMatrix::Cell>(m.k));
  for (std::size_t r = 0; r < m.cells.size(); ++r)
    for (std::size_t c = 0; c < m.k; ++c)
      out.cells[r][c] = m.cells[r][order[c]];
  derive_columns(out);
  return out;
}

std::string serialize(const CompactMatrix &m, MatrixFormat format) {
  if (format == MatrixFormat::json) {
    nlohmann::ordered_json doc;
    doc["k"] = m.k;
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const auto &cell : m.cells[r])
        row.push_back(cell ? nlohmann::ordered_json(*cell) : nlohmann::ordered_json(nullptr));
      rows[m.row_labels[r]] = std::move(row);
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }

  std::string out = "vertex";
  for (std::size_t c = 1; c <= m.k; ++c)
    out += ",c" + std::to_string(c);
  out += '\n';
  for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
    out += csv_field(m.row_labels[r]);
    for (const auto &cell : m.cells[r]) {
      out += ',';
      if (cell)
        out += csv_field(*cell);
    }
    out += '\n';
  }
  return out;
}

CompactMatrix parse_compact(std::string_view text, MatrixFormat format) {
  CompactMatrix m;
  if (format == MatrixFormat::json) {
    nlohmann::ordered_json doc;
    try {
      doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
      throw ParseError(1, std::string("matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("k") || !doc["k"].is_number_unsigned() ||
        !doc.contains("rows") || !doc["rows"].is_object())
      throw ParseError(1, "matrix JSON: expected {\"k\": n, \"rows\": {...}}");
    m.k = doc["k"].get<std::size_t>();
    for (const auto &[label, row] : doc["rows"].items()) {
      if (!row.is_array() || row.size() != m.k)
        throw ParseError(1, "matrix JSON: row '" + label + "' must be an array of " +
                                std::to_string(m.k) + " cells");
      std::vector<CompactMatrix::Cell> cells;
      for (const auto &cell : row) {
        if (cell.is_null())
          cells.emplace_back(std::nullopt);
        else if (cell.is_string())
          cells.emplace_back(cell.get<std::string>());
        else
          throw ParseError(1, "matrix JSON: cells must be strings or null");
      }
      m.row_labels.push_back(label);
      m.cells.push_back(std::move(cells));
    }
    derive_columns(m);
    return m;
  }

  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(lines, line))
    throw ParseError(1, "matrix CSV: missing header");
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  const auto header = csv_split(line, line_no);
  if (header.empty() || header[0] != std::optional<std::string>("vertex"))
    throw ParseError(1, "matrix CSV: header must start with 'vertex'");
  m.k = header.size() - 1;
  for (std::size_t c = 1; c <= m.k; ++c)
    if (header[c] != std::optional<std::string>("c" + std::to_string(c)))
      throw ParseError(1, "matrix CSV: column " + std::to_string(c) + " must be named c" +
                              std::to_string(c));
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    auto fields = csv_split(line, line_no);
    if (fields.size() != m.k + 1)
      throw ParseError(line_no, "matrix CSV: expected " + std::to_string(m.k + 1) + " fields");
    if (!fields[0])
      throw ParseError(line_no, "matrix CSV: empty row label");
    m.row_labels.push_back(*fields[0]);
    m.cells.emplace_back(std::make_move_iterator(fields.begin() + 1),
                         std::make_move_iterator(fields.end()));
  }
  derive_columns(m);
  return m;
}

} // namespace downcolor
