#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "downcolor/coloring.hpp"
#include "downcolor/compact_store.hpp"
#include "downcolor/digraph.hpp"
#include "downcolor/error.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace downcolor;
using namespace downcolor::testing;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Coloring table1_coloring(const Digraph &g) {
  Coloring c;
  c.colors.assign(g.vertex_count(), 0);
  const std::pair<const char *, Color> witness[] = {{"g1", 1}, {"g6", 1}, {"g4", 2},
                                                    {"g2", 3}, {"g3", 2}, {"g5", 3}};
  for (auto [label, color] : witness)
    c.colors[g.id(label)] = color;
  c.k = 3;
  return c;
}

std::vector<CompactMatrix::Cell> row(std::initializer_list<const char *> cells) {
  std::vector<CompactMatrix::Cell> out;
  for (const char *c : cells)
    out.push_back(c ? CompactMatrix::Cell(c) : std::nullopt);
  return out;
}

} // namespace

TEST_CASE("build_compact on the six-gene example") {
  const Digraph g = parse_digraph(genes_text());
  const CompactMatrix m = build_compact(g, table1_coloring(g));
  CHECK(m.k == 3);
  CHECK(m.row_labels == std::vector<std::string>{"g1", "g2", "g3", "g4", "g5", "g6"});
  CHECK(m.cells[0] == row({"g1", "g4", "g5"}));
  CHECK(m.cells[1] == row({"g6", "g4", "g2"}));
  CHECK(m.cells[3] == row({nullptr, "g4", nullptr}));
  CHECK(m.column.at("g6") == 1);
  CHECK(verify_ac_property(m, g));

  const CompactMatrix golden =
      parse_compact(read_file(DOWNCOLOR_TEST_DATA "/table1_compact.csv"), MatrixFormat::csv);
  CHECK(canonical_columns(m) == canonical_columns(golden));

  const CompressionStats s = stats(m);
  CHECK(s.n == 6);
  CHECK(s.k == 3);
  CHECK(s.dense_cells == 36);
  CHECK(s.compact_cells == 18);
  CHECK(s.filled_cells == 12);
}

TEST_CASE("build_compact small cases") {
  const Digraph edgeless = parse_digraph("a\nb");
  Coloring one;
  one.colors = {1, 1};
  one.k = 1;
  const CompactMatrix e = build_compact(edgeless, one);
  CHECK(e.k == 1);
  CHECK(e.cells == std::vector<std::vector<CompactMatrix::Cell>>{row({"a"}), row({"b"})});

  const Digraph chain = parse_digraph("a b\nb c");
  Coloring inj;
  inj.colors = {1, 2, 3};
  inj.k = 3;
  const CompactMatrix m = build_compact(chain, inj);
  CHECK(m.cells[0] == row({"a", "b", "c"}));
  CHECK(m.cells[1] == row({nullptr, "b", "c"}));
  CHECK(m.cells[2] == row({nullptr, nullptr, "c"}));
  CHECK(stats(m).fill_ratio == doctest::Approx(4.0 / 6));
  CHECK(stats(m).compact_cells == stats(m).dense_cells);

  Coloring bad;
  bad.colors = {1, 2, 1};
  bad.k = 2;
  try {
    build_compact(chain, bad);
    FAIL("expected a verification error");
  } catch (const VerificationError &err) {
    const std::string what = err.what();
    CHECK(what.find("a") != std::string::npos);
    CHECK(what.find("c") != std::string::npos);
  }
  CHECK_THROWS_AS(build_compact(parse_digraph("a b\nb a"), inj), CycleError);
}

TEST_CASE("chain fill ratio") {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::string text;
    for (std::size_t i = 0; i + 1 < n; ++i)
      text += "v" + std::to_string(i) + " v" + std::to_string(i + 1) + "\n";
    if (n == 1)
      text = "v0\n";
    const Digraph chain = parse_digraph(text);
    const Coloring c = down_coloring(chain, DownColoringMode::greedy);
    CHECK(c.k == n);
    const CompressionStats s = stats(build_compact(chain, c));
    CHECK(s.fill_ratio == doctest::Approx((n + 1.0) / (2.0 * n)));
  }
}

TEST_CASE("verify_ac_property diagnostics") {
  const Digraph g = parse_digraph(genes_text());
  const CompactMatrix good = build_compact(g, table1_coloring(g));

  // g4 and g5 share column 2: both lie below g1.
  CompactMatrix clash = good;
  for (auto &r : clash.cells)
    if (r[2] == CompactMatrix::Cell("g5")) {
      r[1] = "g5";
      r[2] = std::nullopt;
    }
  clash.column["g5"] = 2;
  const AcCheck c3 = verify_ac_property(clash, g);
  CHECK_FALSE(c3);
  CHECK(c3.clause == 3);
  CHECK(c3.diagnostic.find("g1") != std::string::npos);

  CompactMatrix twice = good;
  twice.cells[1][0] = "g4";
  CHECK(verify_ac_property(twice, g).clause == 1);

  CompactMatrix missing = good;
  missing.cells[0][1] = std::nullopt;
  CHECK(verify_ac_property(missing, g).clause == 2);

  CompactMatrix extra = good;
  extra.cells[3][0] = "g6";
  CHECK(verify_ac_property(extra, g).clause == 2);

  CHECK(verify_ac_property(CompactMatrix{}, Digraph{}));
}

TEST_CASE("serialization") {
  const Digraph g = parse_digraph(genes_text());
  const CompactMatrix m = build_compact(g, table1_coloring(g));
  const std::string csv = serialize(m, MatrixFormat::csv);
  CHECK(csv.rfind("vertex,c1,c2,c3\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  CHECK(csv.find("g4,,g4,\n") != std::string::npos);
  CHECK(parse_compact(csv, MatrixFormat::csv) == m);

  const std::string json = serialize(m, MatrixFormat::json);
  CHECK(json.find("null") != std::string::npos);
  CHECK(parse_compact(json, MatrixFormat::json) == m);
  CHECK(serialize(parse_compact(json, MatrixFormat::json), MatrixFormat::json) == json);

  CHECK(serialize(CompactMatrix{}, MatrixFormat::csv) == "vertex\n");
  CHECK(parse_compact("vertex\n", MatrixFormat::csv) == CompactMatrix{});

  CHECK_THROWS_AS(parse_compact("vertex,c1\na,b,c\n", MatrixFormat::csv), ParseError);
  CHECK_THROWS_AS(parse_compact("node,c1\n", MatrixFormat::csv), ParseError);
  CHECK_THROWS_AS(parse_compact("{\"k\": 1}", MatrixFormat::json), ParseError);
  CHECK_THROWS_AS(parse_compact("[", MatrixFormat::json), ParseError);
}

TEST_CASE("compact store properties on random DAGs") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 120; ++trial) {
    const Digraph g = oracle::random_dag(1 + trial % 15, 0.15 + 0.05 * (trial % 6), rng);
    const Coloring greedy = down_coloring(g, DownColoringMode::greedy);
    const Coloring exact = down_coloring(g, DownColoringMode::exact);
    for (const Coloring *c : {&greedy, &exact}) {
      const CompactMatrix m = build_compact(g, *c);
      const AcCheck check = verify_ac_property(m, g);
      CHECK_MESSAGE(check.ok, check.diagnostic);
      CHECK(same_labeled_digraph(closure_from_matrix(m), transitive_closure(g)));
      CHECK(parse_compact(serialize(m, MatrixFormat::csv), MatrixFormat::csv) == m);
      CHECK(parse_compact(serialize(m, MatrixFormat::json), MatrixFormat::json) == m);
      const CompressionStats s = stats(m);
      CHECK(s.k <= s.n);
      CHECK(s.fill_ratio > 0);
      CHECK(s.fill_ratio <= 1);
    }
    // The fewest columns any valid coloring can give is the exact optimum.
    CHECK(build_compact(g, exact).k == oracle::chromatic_number(down_graph(g)));
  }
}
