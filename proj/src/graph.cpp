#include "apt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace apt {

std::string to_string(const GraphClass &cls) {
    switch (cls.kind) {
    case ClassKind::Simple:
        return "simple";
    case ClassKind::Oriented:
        return "oriented";
    case ClassKind::Labelled:
        return "labelled(" + std::to_string(cls.alphabet_size) + ")";
    }
    return "?";
}

Graph::Graph(int n, GraphClass cls) : class_(cls), adjacency_(n), incident_(n) {
    if (n < 0)
        throw GraphError("negative vertex count");
    if (cls.kind == ClassKind::Labelled && cls.alphabet_size <= 0)
        throw GraphError("labelled graph class needs a positive alphabet size");
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_count())
        throw GraphError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(vertex_count()) + ")");
}

int Graph::add_edge(Vertex u, Vertex v, int label) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
        throw GraphError("parallel edge " + std::to_string(u) + " " + std::to_string(v));
    if (class_.kind == ClassKind::Labelled) {
        if (label < 0 || label >= class_.alphabet_size)
            throw GraphError("label " + std::to_string(label) + " outside alphabet");
    } else if (label != 0) {
        throw GraphError("labels require a labelled graph class");
    }

    Edge e{std::min(u, v), std::max(u, v), Direction::Forward, label};
    if (class_.kind == ClassKind::Oriented && u > v)
        e.dir = Direction::Backward;
    int index = edge_count();
    edges_.push_back(e);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    incident_[u].push_back(index);
    incident_[v].push_back(index);
    return index;
}

std::optional<int> Graph::edge_index(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        return std::nullopt;
    Vertex a = adjacency_[u].size() <= adjacency_[v].size() ? u : v;
    Vertex b = a == u ? v : u;
    const auto &adj = adjacency_[a];
    for (std::size_t i = 0; i < adj.size(); ++i)
        if (adj[i] == b)
            return incident_[a][i];
    return std::nullopt;
}

void Graph::set_direction(int index, Direction dir) {
    if (class_.kind != ClassKind::Oriented)
        throw GraphError("directions require an oriented graph class");
    edges_.at(index).dir = dir;
}

void Graph::set_label(int index, int label) {
    if (class_.kind != ClassKind::Labelled || label < 0 || label >= class_.alphabet_size)
        throw GraphError("invalid label for this graph class");
    edges_.at(index).label = label;
}

std::vector<int> Graph::component_ids(int *count) const {
    std::vector<int> comp(vertex_count(), -1);
    std::vector<Vertex> stack;
    int c = 0;
    for (Vertex s = 0; s < vertex_count(); ++s) {
        if (comp[s] != -1)
            continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : adjacency_[x])
                if (comp[y] == -1) {
                    comp[y] = c;
                    stack.push_back(y);
                }
        }
        ++c;
    }
    if (count)
        *count = c;
    return comp;
}

int Graph::component_count() const {
    int c = 0;
    component_ids(&c);
    return c;
}

bool Graph::is_connected() const { return component_count() <= 1; }

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (vertex_count() > 64)
        throw GraphError("adjacency masks need at most 64 vertices");
    std::vector<std::uint64_t> masks(vertex_count(), 0);
    for (const Edge &e : edges_) {
        masks[e.u] |= std::uint64_t{1} << e.v;
        masks[e.v] |= std::uint64_t{1} << e.u;
    }
    return masks;
}

Graph Graph::without_edges(std::span<const int> removed) const {
    std::vector<char> drop(edges_.size(), 0);
    for (int i : removed)
        drop.at(i) = 1;
    Graph h(vertex_count(), class_);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (!drop[i]) {
            const Edge &e = edges_[i];
            h.add_edge(e.tail(), e.head(), e.label);
        }
    return h;
}

Graph Graph::underlying() const {
    Graph h(vertex_count());
    for (const Edge &e : edges_)
        h.add_edge(e.u, e.v);
    return h;
}

std::string Graph::encode() const {
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end(), [](const Edge &a, const Edge &b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    std::ostringstream out;
    out << to_string(class_) << ' ' << vertex_count();
    for (const Edge &e : sorted) {
        out << ';' << e.u << ',' << e.v;
        if (class_.kind == ClassKind::Oriented)
            out << (e.dir == Direction::Forward ? '>' : '<');
        else if (class_.kind == ClassKind::Labelled)
            out << ':' << e.label;
    }
    return out.str();
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices) {
    std::vector<Vertex> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex v = vertices[i];
        if (v < 0 || v >= g.vertex_count() || index[v] != -1)
            throw GraphError("induced_subgraph: invalid or repeated vertex");
        index[v] = static_cast<Vertex>(i);
    }
    Graph h(static_cast<int>(vertices.size()), g.graph_class());
    for (const Edge &e : g.edges())
        if (index[e.u] != -1 && index[e.v] != -1)
            h.add_edge(index[e.tail()], index[e.head()], e.label);
    return h;
}

Graph delete_vertices(const Graph &g, std::span<const Vertex> removed, std::vector<Vertex> *old_to_new) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (Vertex v : removed) {
        if (v < 0 || v >= g.vertex_count())
            throw GraphError("delete_vertices: vertex out of range");
        gone[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!gone[v])
            keep.push_back(v);
    if (old_to_new) {
        old_to_new->assign(g.vertex_count(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i)
            (*old_to_new)[keep[i]] = static_cast<Vertex>(i);
    }
    return induced_subgraph(g, keep);
}

Graph identify_vertices(const Graph &g, Vertex keep, Vertex merge, std::vector<Vertex> *old_to_new) {
    if (keep == merge || keep < 0 || merge < 0 || keep >= g.vertex_count() || merge >= g.vertex_count())
        throw GraphError("identify_vertices: need two distinct vertices");
    if (g.adjacent(keep, merge))
        throw GraphError("identify_vertices: vertices are adjacent");
    for (Vertex x : g.neighbors(merge))
        if (g.adjacent(keep, x))
            throw GraphError("identify_vertices: neighbourhoods intersect at " + std::to_string(x));

    std::vector<Vertex> map(g.vertex_count());
    Vertex next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (v != merge)
            map[v] = next++;
    map[merge] = map[keep];

    Graph h(g.vertex_count() - 1, g.graph_class());
    for (const Edge &e : g.edges())
        h.add_edge(map[e.tail()], map[e.head()], e.label);
    if (old_to_new)
        *old_to_new = map;
    return h;
}

Graph complete_graph(int n, GraphClass cls) {
    Graph g(n, cls);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph path_graph(int n, GraphClass cls) {
    Graph g(n, cls);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n, GraphClass cls) {
    Graph g = path_graph(n, cls);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

} // namespace apt
