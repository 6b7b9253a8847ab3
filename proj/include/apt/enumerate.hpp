#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "apt/graph.hpp"

namespace apt {

/// Calls `fn` on every decoration of `underlying` permitted by `cls`: one call for simple
/// graphs, 2^m orientations, or alphabet^m labellings. Stops early when `fn` returns false.
void for_each_variant(const Graph &underlying, GraphClass cls, const std::function<bool(const Graph &)> &fn);

/// Every labelled (vertex-numbered) graph on exactly n vertices in class `cls`,
/// connected or not, with every decoration.
void for_each_graph(int n, GraphClass cls, const std::function<bool(const Graph &)> &fn);

/// Canonical adjacency code of a simple graph with n <= 11; equal iff isomorphic.
std::uint64_t canonical_code(const Graph &g);

/// Connected simple graphs with 1..n_max vertices. With `dedup` one representative per
/// isomorphism class (grown vertex by vertex from the previous level), otherwise every
/// labelled connected graph (feasible only for n_max <= 6).
std::vector<Graph> all_connected_graphs(int n_max, bool dedup = true);

/// Connected simple graphs with exactly n vertices, one per isomorphism class.
std::vector<Graph> connected_graphs_of_order(int n);

/// Almost-cliques on t vertices up to isomorphism: K_{t-1} plus one vertex joined to
/// its first d clique vertices, d = 1..t-1 (d = t-1 is K_t).
std::vector<Graph> connected_almost_cliques(int t);

} // namespace apt
