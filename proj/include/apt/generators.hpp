#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "apt/graph.hpp"

namespace apt {

/// Seeded generator with portable draws (the standard distributions are not
/// reproducible across library implementations).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// Every connected simple graph on exactly n vertices: one per isomorphism class, or
/// every vertex-numbered one when `dedup` is off.
struct AllConnected {
    int n;
    bool dedup = true;
};

struct RandomGnp {
    int n;
    double p;
};

struct ForestOfCliquesPlusS {
    std::vector<int> clique_sizes;
    int s_size;
    double attach_prob;
};

/// How decorations are drawn for oriented or labelled classes.
struct VariantPolicy {
    /// Oriented only: probability that a triangle block of the forest is oriented cyclically.
    /// The remaining edges follow a random vertex order, so they create no other directed cycles.
    double cyclic_bias = 0.0;
    /// Oriented only: orient every edge independently instead (ignores cyclic_bias).
    bool uniform = false;
    /// For AllConnected on a non-simple class: emit every decoration instead of one random one.
    bool all_variants = false;
};

struct GeneratorConfig {
    std::uint64_t seed = 0;
    std::variant<AllConnected, RandomGnp, ForestOfCliquesPlusS> family;
    GraphClass graph_class = GraphClass::simple();
    VariantPolicy variants;
};

/// Deterministic in the config. Every graph produced is connected.
std::vector<Graph> generate(const GeneratorConfig &config);

/// A single ForestOfCliquesPlusS instance together with the added vertices (a modulator).
struct PlantedInstance {
    Graph g;
    std::vector<Vertex> planted_s;
};

PlantedInstance forest_of_cliques_plus_s(const ForestOfCliquesPlusS &family, GraphClass cls,
                                         const VariantPolicy &policy, Rng &rng);

/// Connected G(n, p) sample: resampled a few times, then components are chained by extra edges.
Graph random_connected_gnp(int n, double p, Rng &rng);

/// Gives `g` decorations of class `cls` (random orientation or labels).
Graph decorate(const Graph &underlying, GraphClass cls, const VariantPolicy &policy, Rng &rng,
               const std::vector<std::vector<Vertex>> &triangles = {});

/// Random clique sizes for corpus runs: `count` cliques with sizes in [lo, hi].
std::vector<int> random_clique_sizes(int count, int lo, int hi, Rng &rng);

} // namespace apt
