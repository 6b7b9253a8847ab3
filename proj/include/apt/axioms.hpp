#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apt/property.hpp"

namespace apt {

struct AxiomCheck {
    std::string axiom;
    long long cases_checked = 0;
    std::vector<std::string> counterexamples;  // first few, as graph encodings with context

    bool passed() const { return counterexamples.empty(); }
};

struct AxiomReport {
    AxiomCheck inclusiveness{"inclusiveness", 0, {}};
    AxiomCheck block_additivity{"block additivity", 0, {}};
    AxiomCheck subgraph_extension{"strong lambda-subgraph extension", 0, {}};

    bool all_passed() const {
        return inclusiveness.passed() && block_additivity.passed() && subgraph_extension.passed();
    }
};

/// Exhaustive check of the strong λ-extendibility axioms on every graph of the property's
/// class with at most `n_max` vertices:
///  - inclusiveness: every decoration of K1 and K2 belongs to Π;
///  - block additivity: G ∈ Π exactly when every block of G is in Π;
///  - strong λ-subgraph extension (unit weights): for every partition V1 ⊎ V2 with
///    G[V1], G[V2] ∈ Π, some F ⊆ E(V1, V2) with |F| ≥ λ|E(V1, V2)| has G - (E(V1, V2) \ F) ∈ Π.
AxiomReport check_axioms(const PropertySpec &pi, int n_max);

/// Default enumeration size per class: 5 for simple graphs, 4 otherwise.
int default_axiom_n_max(GraphClass cls);

struct HereditaryReport {
    bool hereditary = true;
    std::optional<std::string> counterexample;
};

/// Checks closure under vertex deletion on every graph with at most `n_max` vertices.
HereditaryReport is_hereditary_upto(const PropertySpec &pi, int n_max);

} // namespace apt
