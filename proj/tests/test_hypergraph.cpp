#include <doctest.h>

#include <random>

#include "downcolor/designs.hpp"
#include "downcolor/digraph.hpp"
#include "downcolor/error.hpp"
#include "downcolor/hypergraph.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace downcolor;
using namespace downcolor::testing;

namespace {

std::set<std::set<std::string>> label_edges(const Hypergraph &h) {
  std::set<std::set<std::string>> out;
  for (const auto &e : h.edges()) {
    std::set<std::string> s;
    for (VertexId v : e)
      s.insert(h.label(v));
    out.insert(s);
  }
  return out;
}

bool is_linear(const Hypergraph &h) {
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (std::size_t j = i + 1; j < h.edge_count(); ++j) {
      std::vector<VertexId> common;
      std::set_intersection(h.edge(i).begin(), h.edge(i).end(), h.edge(j).begin(),
                            h.edge(j).end(), std::back_inserter(common));
      if (common.size() > 1)
        return false;
    }
  return true;
}

// Replays an elimination order and returns the largest degree seen at removal.
std::size_t replay(const Hypergraph &h, const std::vector<VertexId> &order) {
  std::vector<VertexId> alive(h.vertex_count());
  for (VertexId v = 0; v < alive.size(); ++v)
    alive[v] = v;
  std::size_t worst = 0;
  for (VertexId u : order) {
    const Hypergraph sub = induced_subhypergraph(h, VertexSet(alive));
    const auto pos = std::lower_bound(alive.begin(), alive.end(), u) - alive.begin();
    worst = std::max(worst, degree(sub, static_cast<VertexId>(pos)));
    alive.erase(alive.begin() + pos);
  }
  return worst;
}

} // namespace

TEST_CASE("Hypergraph construction") {
  const Hypergraph h(4, {{2, 0, 1}, {3, 2}});
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge(0) == Hypergraph::HyperEdge{0, 1, 2});
  CHECK(h.sigma() == 3);
  CHECK(h.label(3) == "v3");
  CHECK(h.incident(2) == std::vector<std::size_t>{0, 1});
  CHECK(h.is_simple());

  const Hypergraph dup(2, {{0, 1}, {1, 0}, {0}});
  CHECK_FALSE(dup.is_simple());
  CHECK(dup.simplified().edges() == std::vector<Hypergraph::HyperEdge>{{0, 1}});
  CHECK(Hypergraph(3, {}).sigma() == 0);

  CHECK_THROWS_AS(Hypergraph(2, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Hypergraph(2, {}, {"a", "a"}), InvalidArgument);
  CHECK_THROWS_AS(Hypergraph(2, {}, {"a"}), InvalidArgument);
}

TEST_CASE("hypergraph text round-trips") {
  const Hypergraph h = parse_hypergraph("# design\na b c\nc d\nz\n");
  CHECK(h.vertex_count() == 5);
  CHECK(h.edge_count() == 2);
  CHECK(label_edges(h) == std::set<std::set<std::string>>{{"a", "b", "c"}, {"c", "d"}});
  CHECK(same_labeled_hypergraph(parse_hypergraph(to_hypergraph_text(h)), h));
  CHECK_THROWS_AS(parse_hypergraph("a b a"), ParseError);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Hypergraph r = oracle::random_hypergraph(2 + trial % 8, trial % 6, 4, rng);
    CHECK(same_labeled_hypergraph(parse_hypergraph(to_hypergraph_text(r)), r));
  }
}

TEST_CASE("down_hypergraph") {
  const Digraph g = parse_digraph(genes_text());
  const Hypergraph open = down_hypergraph(g, false);
  CHECK(open.labels() == std::vector<std::string>{"g4", "g5", "g6"});
  CHECK(label_edges(open) ==
        std::set<std::set<std::string>>{{"g4", "g5"}, {"g4", "g6"}, {"g5", "g6"}});

  const Hypergraph closed = down_hypergraph(g, true);
  CHECK(closed.vertex_count() == 6);
  CHECK(label_edges(closed) == std::set<std::set<std::string>>{
                                   {"g1", "g4", "g5"}, {"g2", "g4", "g6"}, {"g3", "g5", "g6"}});

  CHECK(down_hypergraph(parse_digraph("a\nb"), false).edge_count() == 0);
  CHECK(down_hypergraph(parse_digraph("a\nb"), true).edge_count() == 0);

  // Two tops with the same children give one merged edge, or two unsimplified.
  const Digraph twins = parse_digraph("x a\nx b\ny a\ny b");
  CHECK(down_hypergraph(twins, false).edge_count() == 1);
  CHECK(down_hypergraph(twins, false, false).edge_count() == 2);

  CHECK_THROWS_AS(down_hypergraph(parse_digraph("a b\nb a"), false), CycleError);
}

TEST_CASE("up_digraph") {
  const Digraph small = up_digraph(Hypergraph(2, {{0, 1}}, {"a", "b"}));
  CHECK(small.vertex_count() == 3);
  CHECK(label_arcs(small) == std::set<std::string>{"w0>a", "w0>b"});

  const Digraph h32 = up_digraph(hkm_design(3, 2));
  CHECK(h32.vertex_count() == 9);
  CHECK(h32.edge_count() == 12);
  CHECK(poset_height(h32) == 2);

  CHECK_THROWS_AS(up_digraph(Hypergraph(2, {{0, 1}, {0, 1}})), InvalidArgument);
  CHECK_THROWS_AS(up_digraph(Hypergraph(2, {{0}})), InvalidArgument);

  // Fresh labels avoid clashes with existing ones.
  const Digraph clash = up_digraph(Hypergraph(2, {{0, 1}}, {"w0", "b"}));
  CHECK(clash.label(2) != "w0");

  // The six-gene digraph comes back up to renaming its tops.
  const Digraph genes = parse_digraph(genes_text());
  const Digraph back = up_digraph(down_hypergraph(genes, false));
  CHECK(back.vertex_count() == 6);
  CHECK(back.edge_count() == 6);
  std::set<std::set<std::string>> children;
  for (VertexId w : max_vertices(back))
    children.insert(labels_of(back, down_set(back, w, false)));
  CHECK(children == std::set<std::set<std::string>>{{"g4", "g5"}, {"g4", "g6"}, {"g5", "g6"}});
}

TEST_CASE("clique_graph") {
  const Hypergraph tri(3, {{0, 1, 2}});
  CHECK(clique_graph(tri).is_complete());
  CHECK(clique_graph(tri).edge_count() == 3);

  const UndirectedGraph k3 = clique_graph(hkm_design(3, 1));
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.is_complete());

  const Digraph g = parse_digraph(genes_text());
  CHECK(clique_graph(down_hypergraph(g, true)) == down_graph(g));
}

TEST_CASE("induced_subhypergraph") {
  const Hypergraph h(4, {{0, 1, 2}, {2, 3}});
  const Hypergraph ab = induced_subhypergraph(h, VertexSet({0, 1}));
  CHECK(ab.edges() == std::vector<Hypergraph::HyperEdge>{{0, 1}});
  CHECK(ab.labels() == std::vector<std::string>{"v0", "v1"});

  CHECK(induced_subhypergraph(h, VertexSet({0, 1, 2, 3})) == h);
  CHECK(induced_subhypergraph(h, VertexSet({0, 3})).edge_count() == 0);
  CHECK_THROWS_AS(induced_subhypergraph(h, VertexSet({0, 7})), InvalidArgument);

  // Multiplicity survives.
  const Hypergraph two(3, {{0, 1, 2}, {0, 1}});
  CHECK(induced_subhypergraph(two, VertexSet({0, 1})).edge_count() == 2);
}

TEST_CASE("hypergraph degree") {
  const Hypergraph h41 = hkm_design(4, 1);
  for (VertexId v = 0; v < 4; ++v)
    CHECK(degree(h41, v) == 3);
  CHECK(degree(Hypergraph(3, {{0, 1}}), 2) == 0);
  CHECK(degree(Hypergraph(2, {{0, 1}, {0, 1}}), 0) == 2);
  CHECK(degree(Hypergraph(2, {{0}, {0, 1}}), 0) == 1);
  CHECK_THROWS_AS(degree(Hypergraph(2, {}), 5), InvalidArgument);
  CHECK(min_degree(Hypergraph(3, {{0, 1}})) == 0);
  CHECK(min_degree(Hypergraph{}) == 0);
}

TEST_CASE("intersection_graph") {
  const Hypergraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  const UndirectedGraph ig = intersection_graph(path);
  CHECK(ig.vertex_count() == 3);
  CHECK(ig.edge_count() == 2);
  CHECK(ig.is_forest());

  CHECK(intersection_graph(Hypergraph(4, {{0, 1}, {2, 3}})).edge_count() == 0);
  CHECK(intersection_graph(hkm_design(3, 1)).is_complete());
}

TEST_CASE("hypergraph degeneracy examples") {
  CHECK(degeneracy(Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}})).value == 1);
  for (std::uint32_t k = 2; k <= 5; ++k)
    for (std::uint32_t m = 1; m <= 3; ++m)
      CHECK(degeneracy(hkm_design(k, m)).value == k - 1);
  CHECK(degeneracy(Hypergraph{}).value == 0);
  CHECK(degeneracy(Hypergraph(3, {})).value == 0);
  CHECK(degeneracy(Hypergraph(2, {{0, 1}, {0, 1}})).value == 2);

  const auto r = degeneracy(Hypergraph(3, {{0, 1}, {0, 2}}));
  CHECK(r.elimination_order == std::vector<VertexId>{1, 0, 2});
}

TEST_CASE("degeneracy agrees with the subset oracle") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const Hypergraph h = oracle::random_hypergraph(n, trial % 9, std::min<std::size_t>(n, 5), rng);
    const auto r = degeneracy(h);
    CHECK(r.value == oracle::subset_degeneracy(h));

    std::vector<VertexId> sorted = r.elimination_order;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(sorted.size() == n);
    for (VertexId v = 0; v < n; ++v)
      CHECK(sorted[v] == v);
    CHECK(replay(h, r.elimination_order) == r.value);
  }
}

TEST_CASE("degeneracy is monotone under induced subhypergraphs") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const Hypergraph h = oracle::random_hypergraph(n, 1 + trial % 8, 4, rng);
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < n; ++v)
      if (rng() % 2)
        keep.push_back(v);
    const Hypergraph sub = induced_subhypergraph(h, VertexSet(keep));
    CHECK(degeneracy(sub).value <= degeneracy(h).value);
  }
}

TEST_CASE("clique graph degeneracy is bounded by ind(h)(sigma - 1)") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const Hypergraph h = oracle::random_hypergraph(n, trial % 9, 5, rng);
    const std::size_t sigma = h.sigma();
    const std::size_t bound = degeneracy(h).value * (sigma == 0 ? 0 : sigma - 1);
    CHECK(degeneracy(clique_graph(h)).value <= bound);
    CHECK(degeneracy(clique_graph(h)).value == oracle::subset_degeneracy(clique_graph(h)));
  }
}

TEST_CASE("tree-like linear hypergraphs have degeneracy one") {
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Hypergraph h =
        oracle::random_hypergraph(3 + trial % 8, 1 + trial % 5, 4, rng).simplified();
    if (!is_linear(h))
      continue;
    const UndirectedGraph ig = intersection_graph(h);
    if (!(ig.is_connected() && ig.is_forest()))
      continue;
    ++checked;
    CHECK(degeneracy(h).value == 1);
  }
  CHECK(checked > 20);

  // Without linearity, or with three edges through one vertex, the two
  // conditions come apart.
  const Hypergraph overlap(4, {{0, 1, 2}, {0, 1, 3}});
  CHECK(intersection_graph(overlap).is_forest());
  CHECK(degeneracy(overlap).value == 2);
  const Hypergraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(intersection_graph(star).is_forest());
  CHECK(degeneracy(star).value == 1);
}

TEST_CASE("up and down round-trip") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph h =
        oracle::random_hypergraph(2 + trial % 9, 1 + trial % 6, 4, rng).simplified();
    bool covered = true;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
      covered = covered && !h.incident(v).empty();
    if (!covered)
      continue;
    CHECK(same_labeled_hypergraph(down_hypergraph(up_digraph(h), false), h));
  }

  for (int trial = 0; trial < 100; ++trial) {
    const Digraph g = height_two_reduction(oracle::random_dag(2 + trial % 10, 0.35, rng));
    bool isolated = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      isolated = isolated || (g.successors(v).empty() && g.predecessors(v).empty());
    if (isolated)
      continue;
    const Hypergraph h = down_hypergraph(g, false, false);
    if (!h.is_simple())
      continue;
    const Digraph back = up_digraph(h);
    CHECK(back.edge_count() == g.edge_count());
    std::multiset<std::set<std::string>> want, got;
    for (VertexId w : max_vertices(g))
      want.insert(labels_of(g, down_set(g, w, false)));
    for (VertexId w : max_vertices(back))
      got.insert(labels_of(back, down_set(back, w, false)));
    CHECK(want == got);
  }
}
