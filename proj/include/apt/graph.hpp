#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace apt {

using Vertex = int;

enum class ClassKind : std::uint8_t { Simple, Oriented, Labelled };

/// The graph universe an instance lives in. Labelled classes carry a fixed finite alphabet.
struct GraphClass {
    ClassKind kind = ClassKind::Simple;
    int alphabet_size = 0;

    static GraphClass simple() { return {ClassKind::Simple, 0}; }
    static GraphClass oriented() { return {ClassKind::Oriented, 0}; }
    static GraphClass labelled(int alphabet) { return {ClassKind::Labelled, alphabet}; }

    /// Number of distinct decorations a single edge can carry (1 for simple graphs).
    int edge_variants() const {
        switch (kind) {
        case ClassKind::Simple:
            return 1;
        case ClassKind::Oriented:
            return 2;
        case ClassKind::Labelled:
            return alphabet_size;
        }
        return 1;
    }

    friend bool operator==(const GraphClass &, const GraphClass &) = default;
};

std::string to_string(const GraphClass &cls);

/// Orientation of an edge {u, v} with u < v: Forward is u -> v, Backward is v -> u.
enum class Direction : std::uint8_t { Forward, Backward };

/// Edge stored with u < v. The decoration is interpreted by the graph class.
struct Edge {
    Vertex u;
    Vertex v;
    Direction dir = Direction::Forward;
    int label = 0;

    Vertex tail() const { return dir == Direction::Forward ? u : v; }
    Vertex head() const { return dir == Direction::Forward ? v : u; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend bool operator==(const Edge &, const Edge &) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple underlying graph on dense vertex ids [0, n), optionally oriented or labelled.
///
/// No loops and no parallel edges. Orientation and label data are only meaningful
/// for the matching graph class; `add_edge` rejects decorations the class forbids.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, GraphClass cls = GraphClass::simple());

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const GraphClass &graph_class() const { return class_; }

    /// Adds {u, v}. For oriented graphs the edge is directed u -> v.
    int add_edge(Vertex u, Vertex v, int label = 0);
    int add_arc(Vertex from, Vertex to) { return add_edge(from, to); }

    bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }
    std::optional<int> edge_index(Vertex u, Vertex v) const;

    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(int index) const { return edges_[index]; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

    /// Changes the decoration of an existing edge.
    void set_direction(int edge_index, Direction dir);
    void set_label(int edge_index, int label);

    bool is_connected() const;

    /// Component id per vertex, numbered in order of smallest vertex.
    std::vector<int> component_ids(int *count = nullptr) const;
    int component_count() const;

    /// Neighbourhood bitmasks, valid only for n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    /// Same vertex set and decorations, without the edges in `removed` (indices).
    Graph without_edges(std::span<const int> removed) const;

    /// Underlying simple graph U(G).
    Graph underlying() const;

    /// Canonical byte encoding: class, n, then decorated edges in sorted order.
    std::string encode() const;

    friend bool operator==(const Graph &a, const Graph &b) { return a.encode() == b.encode(); }

private:
    void check_vertex(Vertex v) const;

    GraphClass class_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<int>> incident_;
    std::vector<Edge> edges_;
};

/// Induced subgraph on `vertices`; vertex vertices[i] becomes i. Decorations are inherited.
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

/// Removes `removed` and renumbers the survivors in increasing order.
/// When `old_to_new` is given it receives the id map (-1 for deleted vertices).
Graph delete_vertices(const Graph &g, std::span<const Vertex> removed, std::vector<Vertex> *old_to_new = nullptr);

/// Merges `keep` and `merge` into one vertex carrying the edges of both.
/// Requires the two vertices to be non-adjacent with disjoint neighbourhoods.
Graph identify_vertices(const Graph &g, Vertex keep, Vertex merge, std::vector<Vertex> *old_to_new = nullptr);

/// Builders for the simple test shapes used throughout.
Graph complete_graph(int n, GraphClass cls = GraphClass::simple());
Graph path_graph(int n, GraphClass cls = GraphClass::simple());
Graph cycle_graph(int n, GraphClass cls = GraphClass::simple());

} // namespace apt
