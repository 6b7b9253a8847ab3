#include "apt/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace apt {

void for_each_variant(const Graph &underlying, GraphClass cls, const std::function<bool(const Graph &)> &fn) {
    Graph g(underlying.vertex_count(), cls);
    for (const Edge &e : underlying.edges())
        g.add_edge(e.u, e.v);
    const int m = g.edge_count();
    const int radix = cls.edge_variants();
    if (radix == 1) {
        fn(g);
        return;
    }
    std::vector<int> digits(m, 0);
    while (true) {
        if (!fn(g))
            return;
        int i = 0;
        while (i < m && digits[i] == radix - 1) {
            digits[i] = 0;
            i++;
        }
        if (i == m)
            return;
        ++digits[i];
        for (int j = 0; j <= i; ++j) {
            if (cls.kind == ClassKind::Oriented)
                g.set_direction(j, digits[j] ? Direction::Backward : Direction::Forward);
            else
                g.set_label(j, digits[j]);
        }
    }
}

void for_each_graph(int n, GraphClass cls, const std::function<bool(const Graph &)> &fn) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    if (pairs.size() > 30)
        throw std::length_error("for_each_graph: too many vertices for exhaustive enumeration");
    bool keep_going = true;
    for (std::uint64_t mask = 0; keep_going && mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Graph h(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                h.add_edge(pairs[i].first, pairs[i].second);
        for_each_variant(h, cls, [&](const Graph &g) {
            keep_going = fn(g);
            return keep_going;
        });
    }
}

namespace {

// Colour refinement with canonical colour names (independent of vertex numbering).
std::vector<int> refined_colors(const Graph &g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (Vertex v = 0; v < n; ++v)
        color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (Vertex w : g.neighbors(v))
                sig[v].second.push_back(color[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (Vertex v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        bool stable = true;
        int old_classes = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
        if (static_cast<int>(sorted.size()) != old_classes)
            stable = false;
        color = std::move(next);
        if (stable)
            break;
    }
    return color;
}

struct CanonicalSearch {
    int n;
    std::vector<std::uint64_t> adj;
    std::vector<int> cell_of_position;  // required colour at each position
    std::vector<int> color;
    std::vector<Vertex> placed;
    std::vector<char> used;
    int total_bits;
    std::uint64_t best = 0;
    bool have_best = false;

    // Bits of column j occupy positions [j(j-1)/2, j(j+1)/2) counted from the top.
    std::uint64_t column_bits(int j, Vertex v) const {
        std::uint64_t bits = 0;
        for (int i = 0; i < j; ++i)
            bits = (bits << 1) | ((adj[placed[i]] >> v) & 1);
        return bits;
    }

    void run(int j, std::uint64_t code) {
        if (j == n) {
            if (!have_best || code > best) {
                best = code;
                have_best = true;
            }
            return;
        }
        int prefix_bits = j * (j + 1) / 2;
        for (Vertex v = 0; v < n; ++v) {
            if (used[v] || color[v] != cell_of_position[j])
                continue;
            std::uint64_t next = (code << j) | column_bits(j, v);
            if (have_best) {
                std::uint64_t best_prefix = best >> (total_bits - prefix_bits);
                if (next < best_prefix)
                    continue;
            }
            used[v] = 1;
            placed.push_back(v);
            run(j + 1, next);
            placed.pop_back();
            used[v] = 0;
        }
    }
};

} // namespace

std::uint64_t canonical_code(const Graph &g) {
    const int n = g.vertex_count();
    if (n > 11)
        throw std::length_error("canonical_code supports at most 11 vertices");
    CanonicalSearch cs{n, g.adjacency_masks(), {}, refined_colors(g), {}, std::vector<char>(n, 0), n * (n - 1) / 2};
    cs.cell_of_position = cs.color;
    std::sort(cs.cell_of_position.begin(), cs.cell_of_position.end());
    cs.run(0, 0);
    // Fold n in so graphs of different orders never collide.
    return cs.best * 16 + static_cast<std::uint64_t>(n);
}

std::vector<Graph> connected_graphs_of_order(int n) {
    static std::map<int, std::vector<Graph>> cache;
    if (n < 1)
        return {};
    if (auto it = cache.find(n); it != cache.end())
        return it->second;
    std::vector<Graph> level;
    if (n == 1) {
        level.emplace_back(1);
    } else {
        std::unordered_set<std::uint64_t> seen;
        for (const Graph &base : connected_graphs_of_order(n - 1)) {
            const int m = base.vertex_count();
            for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << m); ++subset) {
                Graph g(m + 1);
                for (const Edge &e : base.edges())
                    g.add_edge(e.u, e.v);
                for (Vertex v = 0; v < m; ++v)
                    if (subset >> v & 1)
                        g.add_edge(v, m);
                if (seen.insert(canonical_code(g)).second)
                    level.push_back(std::move(g));
            }
        }
    }
    cache[n] = level;
    return level;
}

std::vector<Graph> all_connected_graphs(int n_max, bool dedup) {
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n) {
        if (dedup) {
            auto level = connected_graphs_of_order(n);
            out.insert(out.end(), level.begin(), level.end());
            continue;
        }
        for_each_graph(n, GraphClass::simple(), [&](const Graph &g) {
            if (g.is_connected())
                out.push_back(g);
            return true;
        });
    }
    return out;
}

std::vector<Graph> connected_almost_cliques(int t) {
    std::vector<Graph> out;
    if (t == 1) {
        out.emplace_back(1);
        return out;
    }
    for (int d = 1; d <= t - 1; ++d) {
        Graph g = complete_graph(t - 1);
        Graph h(t);
        for (const Edge &e : g.edges())
            h.add_edge(e.u, e.v);
        for (Vertex v = 0; v < d; ++v)
            h.add_edge(v, t - 1);
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace apt
