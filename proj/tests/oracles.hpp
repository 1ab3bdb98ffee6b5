#pragma once

// Brute-force reference computations for tests. Nothing here calls the
// library algorithm it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "downcolor/digraph.hpp"
#include "downcolor/hypergraph.hpp"
#include "downcolor/undirected_graph.hpp"

namespace downcolor::oracle {

// reach[u][v]: v == u or a directed path runs from u to v (Floyd-Warshall).
std::vector<std::vector<bool>> reachability(const Digraph &g);

// u ~ v iff some w reaches both (w == u or w == v allowed), over all w.
UndirectedGraph reachability_down_graph(const Digraph &g);

// max over non-empty S of the minimum degree in H[S], by enumerating all
// 2^n subsets. n <= 20.
std::size_t subset_degeneracy(const Hypergraph &h);
std::size_t subset_degeneracy(const UndirectedGraph &g);

// Smallest k admitting a proper coloring, by plain backtracking in id order.
std::size_t chromatic_number(const UndirectedGraph &g);

// Largest root of x^2 + (s - 1)x - s n = 0, s = sigma(sigma - 1), from the
// textbook quadratic formula.
double quadratic_root(std::uint32_t sigma, double n);

// Random acyclic digraph: vertices "v0".."v{n-1}", each pair i < j gets the
// edge in a random orientation consistent with a hidden random order with
// probability `density`.
Digraph random_dag(std::size_t n, double density, std::mt19937 &rng);

// Random digraph, cycles allowed: each ordered pair independently.
Digraph random_digraph(std::size_t n, double density, std::mt19937 &rng);

// Random hypergraph with `edges` random subsets of size 2..max_edge_size
// (repeats possible).
Hypergraph random_hypergraph(std::size_t vertices, std::size_t edges,
                             std::size_t max_edge_size, std::mt19937 &rng);

} // namespace downcolor::oracle
