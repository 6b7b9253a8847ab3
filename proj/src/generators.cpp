#include "apt/generators.hpp"

#include <algorithm>
#include <numeric>

#include "apt/enumerate.hpp"

namespace apt {

namespace {

void shuffle(std::vector<Vertex> &v, Rng &rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.below(i)]);
}

} // namespace

Graph decorate(const Graph &underlying, GraphClass cls, const VariantPolicy &policy, Rng &rng,
               const std::vector<std::vector<Vertex>> &triangles) {
    const int n = underlying.vertex_count();
    Graph g(n, cls);
    if (cls.kind == ClassKind::Simple) {
        for (const Edge &e : underlying.edges())
            g.add_edge(e.u, e.v);
        return g;
    }
    if (cls.kind == ClassKind::Labelled) {
        for (const Edge &e : underlying.edges())
            g.add_edge(e.u, e.v, static_cast<int>(rng.below(static_cast<std::uint64_t>(cls.alphabet_size))));
        return g;
    }
    if (policy.uniform) {
        for (const Edge &e : underlying.edges()) {
            if (rng.chance(0.5))
                g.add_edge(e.u, e.v);
            else
                g.add_edge(e.v, e.u);
        }
        return g;
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i)
        rank[order[i]] = i;
    // Arcs decided by triangles first; the rest follow the order.
    std::vector<std::pair<Vertex, Vertex>> forced;
    for (const auto &t : triangles) {
        if (t.size() != 3 || !rng.chance(policy.cyclic_bias))
            continue;
        forced.emplace_back(t[0], t[1]);
        forced.emplace_back(t[1], t[2]);
        forced.emplace_back(t[2], t[0]);
    }
    for (auto [a, b] : forced)
        if (!g.adjacent(a, b))
            g.add_edge(a, b);
    for (const Edge &e : underlying.edges()) {
        if (g.adjacent(e.u, e.v))
            continue;
        if (rank[e.u] < rank[e.v])
            g.add_edge(e.u, e.v);
        else
            g.add_edge(e.v, e.u);
    }
    return g;
}

Graph random_connected_gnp(int n, double p, Rng &rng) {
    Graph g(n);
    for (int attempt = 0; attempt < 16; ++attempt) {
        g = Graph(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.chance(p))
                    g.add_edge(u, v);
        if (g.is_connected())
            return g;
    }
    int count = 0;
    std::vector<int> comp = g.component_ids(&count);
    std::vector<Vertex> first(count, -1);
    for (Vertex v = 0; v < n; ++v)
        if (first[comp[v]] < 0)
            first[comp[v]] = v;
    for (int c = 1; c < count; ++c)
        g.add_edge(first[c - 1], first[c]);
    return g;
}

std::vector<int> random_clique_sizes(int count, int lo, int hi, Rng &rng) {
    std::vector<int> sizes(count);
    for (int &s : sizes)
        s = rng.between(lo, hi);
    return sizes;
}

PlantedInstance forest_of_cliques_plus_s(const ForestOfCliquesPlusS &family, GraphClass cls,
                                         const VariantPolicy &policy, Rng &rng) {
    // Tree of cliques: each new clique shares one vertex with the part built so far.
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<Vertex>> cliques;
    int n = 0;
    for (int size : family.clique_sizes) {
        if (size < 1)
            continue;
        std::vector<Vertex> members;
        if (n > 0) {
            members.push_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
            --size;
        }
        for (int i = 0; i < size; ++i)
            members.push_back(n++);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                edges.emplace_back(members[a], members[b]);
        cliques.push_back(members);
    }
    if (n == 0)
        n = 1;
    const int forest_n = n;
    std::vector<Vertex> s;
    for (int i = 0; i < family.s_size; ++i) {
        Vertex x = n++;
        s.push_back(x);
        bool attached = false;
        for (Vertex v = 0; v < forest_n; ++v)
            if (rng.chance(family.attach_prob)) {
                edges.emplace_back(v, x);
                attached = true;
            }
        for (Vertex y : s)
            if (y != x && rng.chance(family.attach_prob))
                edges.emplace_back(y, x);
        if (!attached)
            edges.emplace_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(forest_n))), x);
    }
    Graph underlying(n);
    for (auto [a, b] : edges)
        underlying.add_edge(a, b);
    std::vector<std::vector<Vertex>> triangles;
    for (const auto &c : cliques)
        if (c.size() == 3)
            triangles.push_back(c);
    return PlantedInstance{decorate(underlying, cls, policy, rng, triangles), s};
}

std::vector<Graph> generate(const GeneratorConfig &config) {
    Rng rng(config.seed);
    std::vector<Graph> out;
    if (const auto *all = std::get_if<AllConnected>(&config.family)) {
        std::vector<Graph> base;
        if (all->dedup)
            base = connected_graphs_of_order(all->n);
        else
            for_each_graph(all->n, GraphClass::simple(), [&](const Graph &g) {
                if (g.is_connected())
                    base.push_back(g);
                return true;
            });
        for (const Graph &h : base) {
            if (config.graph_class.kind != ClassKind::Simple && config.variants.all_variants)
                for_each_variant(h, config.graph_class, [&](const Graph &g) {
                    out.push_back(g);
                    return true;
                });
            else
                out.push_back(decorate(h, config.graph_class, config.variants, rng));
        }
    } else if (const auto *gnp = std::get_if<RandomGnp>(&config.family)) {
        out.push_back(decorate(random_connected_gnp(gnp->n, gnp->p, rng), config.graph_class, config.variants, rng));
    } else {
        const auto &forest = std::get<ForestOfCliquesPlusS>(config.family);
        out.push_back(forest_of_cliques_plus_s(forest, config.graph_class, config.variants, rng).g);
    }
    return out;
}

} // namespace apt
