#include "apt/axioms.hpp"

#include <bit>

#include "apt/blocks.hpp"
#include "apt/enumerate.hpp"

namespace apt {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

void record(AxiomCheck &check, const std::string &what) {
    if (check.counterexamples.size() < kMaxCounterexamples)
        check.counterexamples.push_back(what);
}

bool blocks_all_in(const Graph &g, const PropertySpec &pi) {
    for (const auto &block : block_decomposition(g).blocks)
        if (!pi.contains(induced_subgraph(g, block)))
            return false;
    return true;
}

std::vector<Vertex> members_of(std::uint32_t mask, int n, bool inside) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (((mask >> v) & 1) == static_cast<std::uint32_t>(inside))
            out.push_back(v);
    return out;
}

// Some F ⊆ cross with |F| >= need keeps G - (cross \ F) inside Π.
bool extension_exists(const Graph &g, const std::vector<int> &cross, int need, const PropertySpec &pi) {
    const int c = static_cast<int>(cross.size());
    std::vector<int> removed;
    for (std::uint32_t keep = 0; keep < (std::uint32_t{1} << c); ++keep) {
        if (std::popcount(keep) < need)
            continue;
        removed.clear();
        for (int i = 0; i < c; ++i)
            if (!((keep >> i) & 1))
                removed.push_back(cross[i]);
        if (pi.contains(g.without_edges(removed)))
            return true;
    }
    return false;
}

} // namespace

int default_axiom_n_max(GraphClass cls) { return cls.kind == ClassKind::Simple ? 5 : 4; }

AxiomReport check_axioms(const PropertySpec &pi, int n_max) {
    AxiomReport report;
    const GraphClass cls = pi.graph_class;

    for (int n = 1; n <= 2; ++n)
        for_each_variant(complete_graph(n), cls, [&](const Graph &g) {
            ++report.inclusiveness.cases_checked;
            if (!pi.contains(g))
                record(report.inclusiveness, g.encode() + " is not in the property");
            return true;
        });

    for (int n = 1; n <= n_max; ++n) {
        for_each_graph(n, cls, [&](const Graph &g) {
            ++report.block_additivity.cases_checked;
            bool whole = pi.contains(g);
            bool parts = blocks_all_in(g, pi);
            if (whole != parts)
                record(report.block_additivity, g.encode() + (whole ? " is in the property but a block is not"
                                                                    : " is not in the property but all its blocks are"));

            for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); mask += 2) {
                auto v1 = members_of(mask, n, true);
                auto v2 = members_of(mask, n, false);
                if (!pi.contains(induced_subgraph(g, v1)) || (!v2.empty() && !pi.contains(induced_subgraph(g, v2))))
                    continue;
                std::vector<int> cross;
                for (int e = 0; e < g.edge_count(); ++e)
                    if (((mask >> g.edge(e).u) & 1) != ((mask >> g.edge(e).v) & 1))
                        cross.push_back(e);
                int need = static_cast<int>(ceil(pi.lambda.value() * static_cast<std::int64_t>(cross.size())));
                ++report.subgraph_extension.cases_checked;
                if (!extension_exists(g, cross, need, pi))
                    record(report.subgraph_extension,
                           g.encode() + " with V1 mask " + std::to_string(mask) + " keeps fewer than " +
                               std::to_string(need) + " cross edges");
            }
            return true;
        });
    }
    return report;
}

HereditaryReport is_hereditary_upto(const PropertySpec &pi, int n_max) {
    HereditaryReport report;
    for (int n = 2; n <= n_max && report.hereditary; ++n) {
        for_each_graph(n, pi.graph_class, [&](const Graph &g) {
            if (!pi.contains(g))
                return true;
            for (Vertex v = 0; v < n; ++v) {
                Vertex gone[] = {v};
                if (!pi.contains(delete_vertices(g, gone))) {
                    report.hereditary = false;
                    report.counterexample = g.encode() + " is in the property but deleting vertex " +
                                            std::to_string(v) + " leaves a graph outside it";
                    return false;
                }
            }
            return true;
        });
    }
    return report;
}

} // namespace apt
