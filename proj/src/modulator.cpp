#include "apt/modulator.hpp"

#include <algorithm>
#include <optional>

#include "apt/blocks.hpp"

namespace apt {

const char *to_string(ModulatorMethod m) { return m == ModulatorMethod::Greedy ? "greedy" : "exact"; }

namespace {

bool removal_is_forest_of_cliques(const Graph &g, std::span<const Vertex> s) {
    return is_forest_of_cliques(delete_vertices(g, s));
}

} // namespace

Modulator greedy_modulator(const Graph &g) {
    std::vector<char> in_s(g.vertex_count(), 0);
    std::vector<Vertex> s;
    while (true) {
        std::vector<Vertex> old_ids;
        std::vector<Vertex> map;
        Graph rest = delete_vertices(g, s, &map);
        old_ids.resize(rest.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (map[v] >= 0)
                old_ids[map[v]] = v;

        // Smallest non-clique block first; among equals the one with the lowest vertex.
        const std::vector<Vertex> *target = nullptr;
        BlockDecomposition bd = block_decomposition(rest);
        for (const auto &block : bd.blocks) {
            if (is_clique(induced_subgraph(rest, block)))
                continue;
            if (!target || block.size() < target->size() ||
                (block.size() == target->size() && block.front() < target->front()))
                target = &block;
        }
        if (!target)
            break;

        Vertex pick = -1;
        int most = -1;
        for (Vertex v : *target) {
            int inside = 0;
            for (Vertex w : rest.neighbors(v))
                inside += std::binary_search(target->begin(), target->end(), w);
            int missing = static_cast<int>(target->size()) - 1 - inside;
            if (missing > most) {
                most = missing;
                pick = v;
            }
        }
        s.push_back(old_ids[pick]);
    }
    std::sort(s.begin(), s.end());
    return Modulator{s, ModulatorMethod::Greedy, false};
}

std::optional<Modulator> exact_modulator(const Graph &g, int limit) {
    const int n = g.vertex_count();
    if (n > kExactModulatorCap)
        throw BudgetExceeded("exact modulator search is limited to " + std::to_string(kExactModulatorCap) +
                             " vertices, graph has " + std::to_string(n));
    if (limit < 0 || limit > n)
        limit = n;
    std::vector<Vertex> s;
    for (int size = 0; size <= limit; ++size) {
        // Lexicographic walk over size-subsets of [0, n).
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            s.assign(idx.begin(), idx.end());
            if (removal_is_forest_of_cliques(g, s))
                return Modulator{s, ModulatorMethod::ExactSearch, false};
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

Modulator find_modulator(const Graph &g, int budget) {
    Modulator greedy = greedy_modulator(g);
    if (static_cast<int>(greedy.s.size()) <= budget)
        return greedy;
    if (auto exact = exact_modulator(g, budget))
        return *exact;
    return greedy;
}

int modulator_budget(const Rational &k, const Lambda &lambda) {
    Rational limit = 6 * k / (1 - lambda.value());
    return static_cast<int>(ceil(limit)) - 1;
}

Gate modulator_gate(std::size_t s_size, const Rational &k, const Lambda &lambda) {
    Rational limit = 6 * k / (1 - lambda.value());
    return Rational(static_cast<std::int64_t>(s_size)) < limit ? Gate::Proceed : Gate::TooLarge;
}

} // namespace apt
