#pragma once

#include <optional>
#include <span>
#include <vector>

#include "apt/graph.hpp"

namespace apt {

/// Four-way classification of the blocks of G - S.
enum class BlockClass { Isolated, Leaf, Path, Branching };

const char *to_string(BlockClass c);

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and cut vertices.
struct BlockDecomposition {
    /// Sorted vertex set of each block. Ids refer to the decomposed graph.
    std::vector<std::vector<Vertex>> blocks;
    /// Sorted cut vertices Q.
    std::vector<Vertex> cut_vertices;
    /// Block indices containing each vertex.
    std::vector<std::vector<int>> blocks_of_vertex;

    bool is_cut_vertex(Vertex v) const { return blocks_of_vertex[v].size() >= 2; }
    int block_count() const { return static_cast<int>(blocks.size()); }
};

/// Decomposition of G - S with classification and interiors, expressed in ids of G.
struct ClassifiedBlocks {
    BlockDecomposition decomposition;   // over G - S, ids of G (vertices of S own no block)
    std::vector<BlockClass> classes;    // per block
    std::vector<std::vector<Vertex>> interiors;  // V(B) \ Q per block
    std::vector<std::vector<int>> block_neighbors;

    std::vector<int> blocks_in(BlockClass c) const;
    int count(BlockClass c) const;
};

/// Hopcroft-Tarjan biconnected components. Isolated vertices become singleton blocks.
BlockDecomposition block_decomposition(const Graph &g);

/// Decomposes G - S and assigns each block to exactly one class.
ClassifiedBlocks classify_blocks(const Graph &g, std::span<const Vertex> s);

bool is_clique(const Graph &g);

/// A vertex whose removal leaves a clique (in the underlying graph), if one exists.
/// Any vertex of a clique qualifies; the lowest such vertex is returned.
std::optional<Vertex> almost_clique_witness(const Graph &g);
inline bool is_almost_clique(const Graph &g) { return g.vertex_count() > 0 && almost_clique_witness(g).has_value(); }

/// Blocks of size >= 2 are 2-connected; a bridge K2 counts as 2-connected here.
bool is_biconnected(const Graph &g);

bool is_forest_of_cliques(const Graph &g);

struct DanglingComponent {
    Vertex root;
    std::vector<Vertex> body;  // X, sorted; G[X] is a component of G - root

    /// Vertices of G[X ∪ {root}], root first.
    std::vector<Vertex> vertices() const;
};

/// All dangling components of a connected graph: (v, X) with G[X] a component of
/// G - v whose closure G[X ∪ {v}] has a 2-connected almost-clique as underlying graph.
std::vector<DanglingComponent> dangling_components(const Graph &g);

} // namespace apt
