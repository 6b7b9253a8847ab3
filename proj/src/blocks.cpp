#include "apt/blocks.hpp"

#include <algorithm>

namespace apt {

const char *to_string(BlockClass c) {
    switch (c) {
    case BlockClass::Isolated:
        return "B0";
    case BlockClass::Leaf:
        return "B1";
    case BlockClass::Path:
        return "B2";
    case BlockClass::Branching:
        return "B>=3";
    }
    return "?";
}

std::vector<int> ClassifiedBlocks::blocks_in(BlockClass c) const {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(classes.size()); ++b)
        if (classes[b] == c)
            out.push_back(b);
    return out;
}

int ClassifiedBlocks::count(BlockClass c) const {
    return static_cast<int>(std::count(classes.begin(), classes.end(), c));
}

namespace {

// Iterative Hopcroft-Tarjan over an edge stack. `active` masks out vertices (G - S).
BlockDecomposition decompose(const Graph &g, const std::vector<char> &active) {
    const int n = g.vertex_count();
    BlockDecomposition bd;
    bd.blocks_of_vertex.assign(n, {});

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    struct Frame {
        Vertex v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> frames;
    int timer = 0;

    auto emit_block = [&](int until_edge) {
        std::vector<Vertex> vs;
        while (!edge_stack.empty()) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            vs.push_back(g.edge(e).u);
            vs.push_back(g.edge(e).v);
            if (e == until_edge)
                break;
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        bd.blocks.push_back(std::move(vs));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (!active[root] || disc[root] != -1)
            continue;
        bool has_neighbor = false;
        for (Vertex y : g.neighbors(root))
            if (active[y])
                has_neighbor = true;
        if (!has_neighbor) {
            disc[root] = timer++;
            bd.blocks.push_back({root});
            continue;
        }
        disc[root] = low[root] = timer++;
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            Frame &f = frames.back();
            Vertex v = f.v;
            auto nbrs = g.neighbors(v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (!active[w])
                    continue;
                int e = *g.edge_index(v, w);
                if (e == f.parent_edge)
                    continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, e, 0});
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                int pe = f.parent_edge;
                frames.pop_back();
                if (frames.empty())
                    break;
                Vertex parent = frames.back().v;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= disc[parent])
                    emit_block(pe);
            }
        }
    }

    std::sort(bd.blocks.begin(), bd.blocks.end());
    for (int b = 0; b < bd.block_count(); ++b)
        for (Vertex v : bd.blocks[b])
            bd.blocks_of_vertex[v].push_back(b);
    for (Vertex v = 0; v < n; ++v)
        if (bd.blocks_of_vertex[v].size() >= 2)
            bd.cut_vertices.push_back(v);
    return bd;
}

} // namespace

BlockDecomposition block_decomposition(const Graph &g) {
    return decompose(g, std::vector<char>(g.vertex_count(), 1));
}

ClassifiedBlocks classify_blocks(const Graph &g, std::span<const Vertex> s) {
    std::vector<char> active(g.vertex_count(), 1);
    for (Vertex v : s)
        active.at(v) = 0;

    ClassifiedBlocks cb;
    cb.decomposition = decompose(g, active);
    const BlockDecomposition &bd = cb.decomposition;
    const int nb = bd.block_count();
    cb.classes.resize(nb);
    cb.interiors.resize(nb);
    cb.block_neighbors.resize(nb);

    for (int b = 0; b < nb; ++b) {
        int q_count = 0;
        for (Vertex v : bd.blocks[b]) {
            if (bd.is_cut_vertex(v)) {
                ++q_count;
                for (int other : bd.blocks_of_vertex[v])
                    if (other != b)
                        cb.block_neighbors[b].push_back(other);
            } else {
                cb.interiors[b].push_back(v);
            }
        }
        auto &nbrs = cb.block_neighbors[b];
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());

        if (q_count == 0)
            cb.classes[b] = BlockClass::Isolated;
        else if (q_count == 1)
            cb.classes[b] = BlockClass::Leaf;
        else if (q_count == 2 && nbrs.size() == 2)
            cb.classes[b] = BlockClass::Path;
        else
            cb.classes[b] = BlockClass::Branching;
    }
    return cb;
}

bool is_clique(const Graph &g) {
    const long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

std::optional<Vertex> almost_clique_witness(const Graph &g) {
    const int n = g.vertex_count();
    if (n == 0)
        return std::nullopt;
    if (is_clique(g))
        return Vertex{0};
    // Every edge missing from the clique must touch the witness.
    const long long others = static_cast<long long>(n - 1) * (n - 2) / 2;
    for (Vertex v = 0; v < n; ++v)
        if (g.edge_count() - g.degree(v) == others)
            return v;
    return std::nullopt;
}

bool is_biconnected(const Graph &g) {
    if (g.vertex_count() < 2 || !g.is_connected())
        return false;
    return block_decomposition(g).block_count() == 1;
}

bool is_forest_of_cliques(const Graph &g) {
    BlockDecomposition bd = block_decomposition(g);
    for (const auto &block : bd.blocks) {
        long long size = static_cast<long long>(block.size());
        long long edges = 0;
        for (Vertex v : block)
            for (Vertex w : g.neighbors(v))
                if (w > v && std::binary_search(block.begin(), block.end(), w))
                    ++edges;
        if (edges != size * (size - 1) / 2)
            return false;
    }
    return true;
}

std::vector<Vertex> DanglingComponent::vertices() const {
    std::vector<Vertex> vs{root};
    vs.insert(vs.end(), body.begin(), body.end());
    return vs;
}

std::vector<DanglingComponent> dangling_components(const Graph &g) {
    if (!g.is_connected())
        throw GraphError("dangling_components: graph must be connected");
    // G[X ∪ {v}] is 2-connected exactly when it is a single leaf block of G hanging at v.
    BlockDecomposition bd = block_decomposition(g);
    std::vector<DanglingComponent> out;
    for (const auto &block : bd.blocks) {
        if (block.size() < 2)
            continue;
        std::vector<Vertex> cuts;
        for (Vertex v : block)
            if (bd.is_cut_vertex(v))
                cuts.push_back(v);
        if (cuts.size() != 1)
            continue;
        Vertex root = cuts.front();
        if (!almost_clique_witness(induced_subgraph(g, block)))
            continue;
        DanglingComponent dc{root, {}};
        for (Vertex v : block)
            if (v != root)
                dc.body.push_back(v);
        out.push_back(std::move(dc));
    }
    std::sort(out.begin(), out.end(), [](const DanglingComponent &a, const DanglingComponent &b) {
        return std::tie(a.root, a.body) < std::tie(b.root, b.body);
    });
    return out;
}

} // namespace apt
