#include "apt/excess.hpp"

#include <algorithm>
#include <bit>

#include "apt/blocks.hpp"
#include "apt/enumerate.hpp"

namespace apt {

Rational pt(int n, int m, const Lambda &lambda, int components) {
    return lambda.value() * m + lambda.half_complement() * (n - components);
}

Rational pt(const Graph &g, const Lambda &lambda) {
    return pt(g.vertex_count(), g.edge_count(), lambda, std::max(1, g.component_count()));
}

namespace {

// Next subset of the same size (Gosper's hack).
std::uint32_t next_combination(std::uint32_t x) {
    std::uint32_t c = x & -x;
    std::uint32_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

int subset_search(const Graph &g, const PropertySpec &pi, int edge_cap) {
    const int m = g.edge_count();
    if (m > edge_cap)
        throw BlockTooLarge("block with " + std::to_string(m) + " edges exceeds the edge cap of " +
                            std::to_string(edge_cap));
    std::vector<int> removed;
    for (int r = 0; r <= m; ++r) {
        if (r == 0) {
            if (pi.contains(g))
                return m;
            continue;
        }
        for (std::uint32_t x = (std::uint32_t{1} << r) - 1; x < (std::uint32_t{1} << m); x = next_combination(x)) {
            removed.clear();
            for (std::uint32_t rest = x; rest; rest &= rest - 1)
                removed.push_back(std::countr_zero(rest));
            if (pi.contains(g.without_edges(removed)))
                return m - r;
            if (r == m)
                break;
        }
    }
    return 0;
}

int block_ms(const Graph &block, const PropertySpec &pi, int edge_cap) {
    if (block.edge_count() == 0)
        return 0;
    if (pi.max_subgraph && block.vertex_count() <= kSolverVertexCap)
        return pi.max_subgraph(block);
    return subset_search(block, pi, edge_cap);
}

} // namespace

int ms(const Graph &g, const PropertySpec &pi, int edge_cap) {
    BlockDecomposition bd = block_decomposition(g);
    int total = 0;
    for (const auto &block : bd.blocks) {
        if (block.size() < 2)
            continue;
        total += block_ms(induced_subgraph(g, block), pi, edge_cap);
    }
    return total;
}

int ms_by_subsets(const Graph &g, const PropertySpec &pi, int edge_cap) {
    return subset_search(g, pi, edge_cap);
}

ExcessValue excess(const Graph &g, const PropertySpec &pi, int edge_cap) {
    ExcessValue value;
    value.ms = ms(g, pi, edge_cap);
    value.pt = pt(g, pi.lambda);
    value.ex = value.ms - value.pt;
    return value;
}

int default_clique_cap(GraphClass cls) { return cls.kind == ClassKind::Simple ? 8 : 5; }

Rational min_excess_over_variants(const Graph &underlying, const PropertySpec &pi) {
    std::optional<Rational> best;
    for_each_variant(underlying, pi.graph_class, [&](const Graph &g) {
        Rational ex = excess(g, pi).ex;
        if (!best || ex < *best)
            best = ex;
        return true;
    });
    return *best;
}

Rational ex_clique(int j, const PropertySpec &pi, int cap) {
    if (cap < 0)
        cap = default_clique_cap(pi.graph_class);
    if (j < 1)
        throw std::invalid_argument("ex_clique needs j >= 1");
    if (j > cap)
        throw CliqueTooLarge("K_" + std::to_string(j) + " exceeds the clique cap of " + std::to_string(cap));
    return min_excess_over_variants(complete_graph(j), pi);
}

std::optional<DivergenceWitness> divergence_witness(const PropertySpec &pi, int cap) {
    if (cap < 0)
        cap = default_clique_cap(pi.graph_class);
    const Rational floor = pi.lambda.half_complement();
    for (int j = 2; j <= cap; ++j) {
        Rational ex = ex_clique(j, pi, cap);
        if (ex > floor)
            return DivergenceWitness{j, ex - floor};
    }
    return std::nullopt;
}

Rational inf_ak(const PropertySpec &pi, int j, const Rational &a) {
    Rational best = a;
    for (int t = 2; t <= j; ++t)
        for (const Graph &shape : connected_almost_cliques(t))
            for_each_variant(shape, pi.graph_class, [&](const Graph &g) {
                Rational ex = excess(g, pi).ex;
                if (ex > 0 && ex < best)
                    best = ex;
                return true;
            });
    return best;
}

const char *to_string(TriangleMembership t) {
    switch (t) {
    case TriangleMembership::All:
        return "all";
    case TriangleMembership::None:
        return "none";
    case TriangleMembership::Partial:
        return "partial";
    }
    return "?";
}

bool TriangleReport::cyclic_member() const {
    return std::any_of(variants.begin(), variants.end(),
                       [](const TriangleVariant &v) { return v.name == "cyclic" && v.member; });
}

bool TriangleReport::transitive_member() const {
    return std::any_of(variants.begin(), variants.end(),
                       [](const TriangleVariant &v) { return v.name == "transitive" && v.member; });
}

namespace {

bool is_cyclic_triangle(const Graph &g) {
    std::vector<int> indegree(3, 0);
    for (const Edge &e : g.edges())
        ++indegree[e.head()];
    return indegree == std::vector<int>{1, 1, 1};
}

} // namespace

TriangleReport triangle_membership(const PropertySpec &pi) {
    TriangleReport report;
    int members = 0, total = 0;
    for_each_variant(complete_graph(3), pi.graph_class, [&](const Graph &g) {
        bool member = pi.contains(g);
        ++total;
        members += member;
        std::string name;
        switch (pi.graph_class.kind) {
        case ClassKind::Simple:
            name = "K3";
            break;
        case ClassKind::Oriented:
            name = is_cyclic_triangle(g) ? "cyclic" : "transitive";
            break;
        case ClassKind::Labelled:
            for (const Edge &e : g.edges())
                name += (name.empty() ? "" : ",") + std::to_string(e.label);
            break;
        }
        // Oriented variants collapse onto their two isomorphism classes.
        auto same = std::find_if(report.variants.begin(), report.variants.end(),
                                 [&](const TriangleVariant &v) { return v.name == name; });
        if (same == report.variants.end())
            report.variants.push_back({name, member});
        else
            same->member = same->member && member;
        return true;
    });
    if (members == total)
        report.membership = TriangleMembership::All;
    else if (members == 0)
        report.membership = TriangleMembership::None;
    else
        report.membership = TriangleMembership::Partial;
    return report;
}

PropertyConstants property_constants(const PropertySpec &pi) {
    auto witness = divergence_witness(pi);
    if (!witness)
        throw NoDivergenceWitness("property '" + pi.name + "' has no clique K_j with ex(K_j) > (1-λ)/2 up to j = " +
                                  std::to_string(default_clique_cap(pi.graph_class)));
    return PropertyConstants{pi.lambda, witness->j, witness->a, inf_ak(pi, witness->j, witness->a)};
}

} // namespace apt
