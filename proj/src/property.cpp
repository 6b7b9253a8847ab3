#include "apt/property.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace apt {

namespace {

void check_solver_size(const Graph &g) {
    if (g.vertex_count() > kSolverVertexCap)
        throw std::length_error("exact solver limited to " + std::to_string(kSolverVertexCap) + " vertices");
}

// Two-colouring where an edge with `parity` 1 must join different sides.
bool parity_colorable(const Graph &g, const std::function<int(const Edge &)> &parity) {
    std::vector<int> side(g.vertex_count(), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            for (Vertex y : g.neighbors(x)) {
                int want = side[x] ^ parity(g.edge(*g.edge_index(x, y)));
                if (side[y] == -1) {
                    side[y] = want;
                    queue.push(y);
                } else if (side[y] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool color_from(const Graph &g, const std::vector<Vertex> &order, std::size_t pos, int q, int used,
                std::vector<int> &color) {
    if (pos == order.size())
        return true;
    Vertex v = order[pos];
    int limit = std::min(q, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (Vertex w : g.neighbors(v))
            if (color[w] == c) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        color[v] = c;
        if (color_from(g, order, pos + 1, q, std::max(used, c + 1), color))
            return true;
        color[v] = -1;
    }
    return false;
}

std::vector<Vertex> bfs_order(const Graph &g) {
    const int n = g.vertex_count();
    std::vector<Vertex> by_degree(n);
    for (Vertex v = 0; v < n; ++v)
        by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<char> seen(n, 0);
    std::vector<Vertex> order;
    for (Vertex s : by_degree) {
        if (seen[s])
            continue;
        seen[s] = 1;
        std::size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            Vertex x = order[head++];
            for (Vertex y : g.neighbors(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    order.push_back(y);
                }
        }
    }
    return order;
}

struct QCutSearch {
    int q;
    int n;
    std::vector<std::vector<int>> earlier;  // neighbours of order[i] among order[0..i)
    std::vector<int> remaining;             // edges whose later endpoint sits at position >= i
    std::vector<int> color;
    int best = 0;

    void run(int pos, int used, int value) {
        if (pos == n) {
            best = std::max(best, value);
            return;
        }
        if (value + remaining[pos] <= best)
            return;
        int limit = std::min(q, used + 1);
        for (int c = 0; c < limit; ++c) {
            int gain = 0;
            for (int p : earlier[pos])
                if (color[p] != c)
                    ++gain;
            color[pos] = c;
            run(pos + 1, std::max(used, c + 1), value + gain);
        }
    }
};

} // namespace

bool is_bipartite(const Graph &g) {
    return parity_colorable(g, [](const Edge &) { return 1; });
}

bool is_balanced(const Graph &g) {
    return parity_colorable(g, [](const Edge &e) { return e.label; });
}

bool is_q_colorable(const Graph &g, int q) {
    std::vector<int> color(g.vertex_count(), -1);
    return color_from(g, bfs_order(g), 0, q, 0, color);
}

bool is_acyclic(const Graph &g) {
    const int n = g.vertex_count();
    std::vector<int> indegree(n, 0);
    std::vector<std::vector<Vertex>> out(n);
    for (const Edge &e : g.edges()) {
        out[e.tail()].push_back(e.head());
        ++indegree[e.head()];
    }
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indegree[v] == 0)
            ready.push_back(v);
    int removed = 0;
    while (!ready.empty()) {
        Vertex v = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex w : out[v])
            if (--indegree[w] == 0)
                ready.push_back(w);
    }
    return removed == n;
}

int max_cut(const Graph &g) {
    check_solver_size(g);
    const int n = g.vertex_count();
    if (n <= 1)
        return 0;
    auto adj = g.adjacency_masks();
    // Gray-code walk over the sides of vertices 0..n-2; vertex n-1 stays on side 0.
    std::uint64_t side = 0;
    int value = 0, best = 0;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t step = 1; step < steps; ++step) {
        int i = std::countr_zero(step);
        std::uint64_t mine = (side >> i) & 1 ? side : ~side;
        int same = std::popcount(adj[i] & mine);
        value += 2 * same - g.degree(i);
        side ^= std::uint64_t{1} << i;
        best = std::max(best, value);
    }
    return best;
}

int max_balanced_subgraph(const Graph &g) {
    check_solver_size(g);
    const int n = g.vertex_count();
    if (n == 0)
        return 0;
    std::vector<std::uint64_t> pos(n, 0), neg(n, 0);
    for (const Edge &e : g.edges()) {
        auto &target = e.label == 0 ? pos : neg;
        target[e.u] |= std::uint64_t{1} << e.v;
        target[e.v] |= std::uint64_t{1} << e.u;
    }
    auto satisfied_at = [&](int i, std::uint64_t side) {
        std::uint64_t same = (side >> i) & 1 ? side : ~side;
        return std::popcount(pos[i] & same) + std::popcount(neg[i] & ~same);
    };
    std::uint64_t side = 0;
    int value = 0;
    for (const Edge &e : g.edges())
        value += e.label == 0 ? 1 : 0;
    int best = value;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t step = 1; step < steps; ++step) {
        int i = std::countr_zero(step);
        value += g.degree(i) - 2 * satisfied_at(i, side);
        side ^= std::uint64_t{1} << i;
        best = std::max(best, value);
    }
    return best;
}

int max_q_colorable_subgraph(const Graph &g, int q) {
    check_solver_size(g);
    const int n = g.vertex_count();
    if (q >= n)
        return g.edge_count();
    if (q == 2)
        return max_cut(g);
    std::vector<Vertex> order = bfs_order(g);
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i)
        position[order[i]] = i;

    QCutSearch search{q, n, std::vector<std::vector<int>>(n), std::vector<int>(n + 1, 0), std::vector<int>(n, -1)};
    for (const Edge &e : g.edges()) {
        int a = position[e.u], b = position[e.v];
        search.earlier[std::max(a, b)].push_back(std::min(a, b));
    }
    for (int i = n - 1; i >= 0; --i)
        search.remaining[i] = search.remaining[i + 1] + static_cast<int>(search.earlier[i].size());

    // Greedy seed: each vertex takes the colour that cuts the most earlier edges.
    std::vector<int> greedy(n, 0);
    for (int i = 0; i < n; ++i) {
        int best_c = 0, best_gain = -1;
        for (int c = 0; c < q; ++c) {
            int gain = 0;
            for (int p : search.earlier[i])
                gain += greedy[p] != c;
            if (gain > best_gain) {
                best_gain = gain;
                best_c = c;
            }
        }
        greedy[i] = best_c;
        search.best += best_gain;
    }
    search.run(0, 0, 0);
    return search.best;
}

int max_acyclic_subgraph(const Graph &g) {
    check_solver_size(g);
    const int n = g.vertex_count();
    std::vector<std::uint32_t> in(n, 0);
    for (const Edge &e : g.edges())
        in[e.head()] |= std::uint32_t{1} << e.tail();
    // best[mask]: most arcs kept when the vertices of mask come first in the order.
    std::vector<int> best(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        int value = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            std::uint32_t before = mask & ~(std::uint32_t{1} << v);
            value = std::max(value, best[before] + std::popcount(in[v] & before));
        }
        best[mask] = value;
    }
    return best.back();
}

PropertySpec bipartite_property() {
    PropertySpec p;
    p.name = "bipartite";
    p.lambda = Lambda(Rational(1, 2));
    p.graph_class = GraphClass::simple();
    p.membership = is_bipartite;
    p.declared_hereditary = true;
    p.max_subgraph = max_cut;
    return p;
}

PropertySpec q_colorable_property(int q) {
    if (q < 2)
        throw std::invalid_argument("q-colourability needs q >= 2");
    PropertySpec p;
    p.name = "qcol:" + std::to_string(q);
    p.lambda = Lambda(1 - Rational(1, q));
    p.graph_class = GraphClass::simple();
    p.membership = [q](const Graph &g) { return is_q_colorable(g, q); };
    p.declared_hereditary = true;
    p.max_subgraph = [q](const Graph &g) { return max_q_colorable_subgraph(g, q); };
    return p;
}

PropertySpec acyclic_oriented_property() {
    PropertySpec p;
    p.name = "acyclic-oriented";
    p.lambda = Lambda(Rational(1, 2));
    p.graph_class = GraphClass::oriented();
    p.membership = is_acyclic;
    p.declared_hereditary = true;
    p.max_subgraph = max_acyclic_subgraph;
    return p;
}

PropertySpec balanced_signed_property() {
    PropertySpec p;
    p.name = "balanced-signed";
    p.lambda = Lambda(Rational(1, 2));
    p.graph_class = GraphClass::labelled(2);
    p.membership = is_balanced;
    p.declared_hereditary = true;
    p.max_subgraph = max_balanced_subgraph;
    return p;
}

PropertySpec property_by_name(std::string_view name) {
    if (name == "bipartite")
        return bipartite_property();
    if (name == "acyclic-oriented")
        return acyclic_oriented_property();
    if (name == "balanced-signed")
        return balanced_signed_property();
    if (name.starts_with("qcol:")) {
        std::string_view digits = name.substr(5);
        int q = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
        if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size() && q >= 3)
            return q_colorable_property(q);
        throw std::invalid_argument("qcol needs an integer q >= 3, got '" + std::string(name) + "'");
    }
    throw std::invalid_argument("unknown property '" + std::string(name) +
                                "' (expected bipartite, qcol:q, acyclic-oriented or balanced-signed)");
}

} // namespace apt
