#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apt/graph.hpp"
#include "apt/property.hpp"
#include "apt/rational.hpp"

namespace apt {

class BlockTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CliqueTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge cap for the generic edge-subset search on a single block.
inline constexpr int kDefaultEdgeCap = 20;

/// Poljak-Turzik bound λm + (1-λ)(n-c)/2 for a graph with c components (c = 1 if connected).
Rational pt(int n, int m, const Lambda &lambda, int components = 1);
Rational pt(const Graph &g, const Lambda &lambda);

/// Edge count of a largest spanning Π-subgraph, summed over blocks.
///
/// Each block goes to the property's exact solver when it has one (and the block fits the
/// solver's vertex cap) and otherwise to an edge-subset search over the membership oracle,
/// which throws BlockTooLarge above `edge_cap` edges.
int ms(const Graph &g, const PropertySpec &pi, int edge_cap = kDefaultEdgeCap);

/// Largest Π-subgraph of the whole graph by edge-subset search, without block decomposition.
int ms_by_subsets(const Graph &g, const PropertySpec &pi, int edge_cap = kDefaultEdgeCap);

struct ExcessValue {
    int ms;
    Rational pt;
    Rational ex;
};

/// ms - pt. Works for disconnected graphs too, with pt taken over the component count.
ExcessValue excess(const Graph &g, const PropertySpec &pi, int edge_cap = kDefaultEdgeCap);

/// Default largest clique order examined per graph class.
int default_clique_cap(GraphClass cls);

/// Minimum excess over every decoration of K_j allowed by the property's class.
Rational ex_clique(int j, const PropertySpec &pi, int cap = -1);

/// Minimum excess over every decoration of `underlying` (a connected simple graph).
Rational min_excess_over_variants(const Graph &underlying, const PropertySpec &pi);

struct DivergenceWitness {
    int j;
    Rational a;  // ex(K_j) - (1-λ)/2 > 0
};

/// Smallest j <= cap with ex(K_j) > (1-λ)/2.
std::optional<DivergenceWitness> divergence_witness(const PropertySpec &pi, int cap = -1);

/// min(a, smallest positive excess over decorated almost-cliques with 2..j vertices).
Rational inf_ak(const PropertySpec &pi, int j, const Rational &a);

enum class TriangleMembership { All, None, Partial };

const char *to_string(TriangleMembership t);

struct TriangleVariant {
    std::string name;  // "cyclic"/"transitive" for oriented, label triple for labelled
    bool member;
};

struct TriangleReport {
    TriangleMembership membership;
    std::vector<TriangleVariant> variants;

    /// Oriented classes only.
    bool cyclic_member() const;
    bool transitive_member() const;
};

/// Tests every decoration of K3 against Π. Oriented triangles are grouped into the
/// cyclic and the transitive class.
TriangleReport triangle_membership(const PropertySpec &pi);

struct PropertyConstants {
    Lambda lambda;
    int j;
    Rational a;
    Rational inf_ak;
};

class NoDivergenceWitness : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Divergence witness and inf_AK. Throws NoDivergenceWitness when no witness exists within caps.
PropertyConstants property_constants(const PropertySpec &pi);

} // namespace apt
