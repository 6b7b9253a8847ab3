#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "apt/graph.hpp"
#include "apt/rational.hpp"

namespace apt {

/// A graph property Π together with its λ and the graph universe it is defined on.
///
/// `membership` must be total and deterministic on graphs of `graph_class`, including
/// disconnected ones (spanning subgraphs routinely are). `max_subgraph`, when set, is an
/// exact shortcut for the edge count of a largest spanning Π-subgraph; without it the
/// edge-subset search over `membership` is used.
struct PropertySpec {
    std::string name;
    Lambda lambda{Rational(1, 2)};
    GraphClass graph_class;
    std::function<bool(const Graph &)> membership;
    bool declared_hereditary = false;
    std::function<int(const Graph &)> max_subgraph;

    bool contains(const Graph &g) const { return membership(g); }
};

PropertySpec bipartite_property();
PropertySpec q_colorable_property(int q);
PropertySpec acyclic_oriented_property();
/// Balanced signed graphs: label 0 is positive, 1 is negative (λ = 1/2, labelled).
PropertySpec balanced_signed_property();

/// Resolves "bipartite", "qcol:q", "acyclic-oriented" and "balanced-signed".
/// Throws std::invalid_argument for anything else.
PropertySpec property_by_name(std::string_view name);

// Membership tests and exact maximum-subgraph solvers behind the built-ins.
bool is_bipartite(const Graph &g);
bool is_q_colorable(const Graph &g, int q);
bool is_acyclic(const Graph &g);
bool is_balanced(const Graph &g);

int max_cut(const Graph &g);
int max_q_colorable_subgraph(const Graph &g, int q);
int max_acyclic_subgraph(const Graph &g);
int max_balanced_subgraph(const Graph &g);

/// Largest vertex count the exact solvers above accept.
inline constexpr int kSolverVertexCap = 22;

} // namespace apt
