#pragma once
// Independent brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "apt/graph.hpp"
#include "apt/property.hpp"
#include "apt/rational.hpp"

namespace brute {

using apt::Graph;
using apt::Vertex;

inline int components_of(const Graph &g, std::uint32_t mask) {
    const int n = g.vertex_count();
    std::uint32_t seen = 0;
    int count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (!((mask >> s) & 1) || ((seen >> s) & 1))
            continue;
        ++count;
        std::vector<Vertex> stack{s};
        seen |= 1u << s;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x))
                if (((mask >> y) & 1) && !((seen >> y) & 1)) {
                    seen |= 1u << y;
                    stack.push_back(y);
                }
        }
    }
    return count;
}

/// 2-connected in the block sense: connected, at least two vertices, and no single
/// removal disconnects it (two adjacent vertices qualify).
inline bool two_connected(const Graph &g, std::uint32_t mask) {
    int size = __builtin_popcount(mask);
    if (size < 2 || components_of(g, mask) != 1)
        return false;
    if (size == 2)
        return true;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (((mask >> v) & 1) && components_of(g, mask & ~(1u << v)) != 1)
            return false;
    return true;
}

/// Blocks as sorted vertex lists: maximal 2-connected vertex sets plus isolated vertices.
inline std::vector<std::vector<Vertex>> blocks(const Graph &g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> good;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
        if (two_connected(g, mask))
            good.push_back(mask);
    std::vector<std::vector<Vertex>> out;
    for (std::uint32_t m : good) {
        bool maximal = std::none_of(good.begin(), good.end(), [&](std::uint32_t o) { return o != m && (o & m) == m; });
        if (!maximal)
            continue;
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < n; ++v)
            if ((m >> v) & 1)
                vs.push_back(v);
        out.push_back(vs);
    }
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            out.push_back({v});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Vertex> cut_vertices(const Graph &g) {
    const int n = g.vertex_count();
    const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    int base = components_of(g, all);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > 0 && components_of(g, all & ~(1u << v)) > base)
            out.push_back(v);
    return out;
}

inline bool forest_of_cliques(const Graph &g) {
    for (const auto &b : blocks(g))
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (!g.adjacent(b[i], b[j]))
                    return false;
    return true;
}

/// Largest spanning Π-subgraph by trying every edge subset.
inline int ms(const Graph &g, const apt::PropertySpec &pi) {
    const int m = g.edge_count();
    int best = 0;
    for (std::uint32_t keep = 0; keep < (1u << m); ++keep) {
        int size = __builtin_popcount(keep);
        if (size <= best)
            continue;
        std::vector<int> removed;
        for (int e = 0; e < m; ++e)
            if (!((keep >> e) & 1))
                removed.push_back(e);
        if (pi.contains(g.without_edges(removed)))
            best = size;
    }
    return best;
}

/// Max cut by trying every bipartition, without any membership oracle.
inline int max_cut(const Graph &g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t side = 0; side < (1u << n); ++side) {
        int cut = 0;
        for (const auto &e : g.edges())
            cut += ((side >> e.u) & 1) != ((side >> e.v) & 1);
        best = std::max(best, cut);
    }
    return best;
}

inline apt::Rational pt(const Graph &g, apt::Rational lambda) {
    const int n = g.vertex_count();
    int c = components_of(g, (1u << n) - 1);
    return lambda * g.edge_count() + (1 - lambda) / 2 * (n - std::max(c, 1));
}

inline apt::Rational ex(const Graph &g, const apt::PropertySpec &pi) {
    return brute::ms(g, pi) - pt(g, pi.lambda.value());
}

/// Smallest |S| with G - S a forest of cliques.
inline int min_modulator_size(const Graph &g) {
    const int n = g.vertex_count();
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best)
            continue;
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if ((mask >> v) & 1)
                s.push_back(v);
        if (forest_of_cliques(apt::delete_vertices(g, s)))
            best = size;
    }
    return best;
}

} // namespace brute
