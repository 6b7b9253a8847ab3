#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apt/generators.hpp"
#include "apt/kernelizer.hpp"

namespace apt {

/// True iff ms(G) >= pt(G) + k, compared exactly.
bool solve_apt(const Instance &inst);

/// A kernelizer outcome that disagrees with the brute-force answer.
class ContractViolation : public std::runtime_error {
public:
    ContractViolation(const std::string &what, std::string payload)
        : std::runtime_error(what), payload_(std::move(payload)) {}
    /// The offending instance in graph-file form, with k and the property.
    const std::string &payload() const { return payload_; }

private:
    std::string payload_;
};

struct EquivalenceReport {
    std::string outcome;          // Outcome::tag()
    bool oracle_answer = false;   // brute force on the input
    std::optional<bool> kernel_answer;
    Outcome detail;
};

/// Runs kernelize and checks its contract against solve_apt. Throws ContractViolation
/// when a Yes outcome meets a NO instance or a kernel changes the answer.
EquivalenceReport equivalence_check(const Instance &inst, const KernelOptions &options = {});

std::string instance_payload(const Instance &inst);

/// Deletes vertices while the graph stays connected and `still_fails` keeps holding.
Graph shrink(const Graph &g, const std::function<bool(const Graph &)> &still_fails);

struct LemmaResult {
    std::string name;
    long long cases = 0;
    std::vector<std::string> counterexamples;  // shrunk reproducers

    bool passed() const { return counterexamples.empty(); }
};

struct LemmaSuiteConfig {
    std::uint64_t seed = 1;
    int cutvertex_instances = 500;
    int cutvertex_n_max = 10;
    int half_n_max = 8;          // simple graphs; oriented graphs use one orientation above half_variant_n_max
    int half_variant_n_max = 5;  // every decoration up to this order
    int forest_instances = 1000;
};

/// Every identity and inequality applicable to Π, each with its own result.
/// Any counterexample points at an implementation bug, since the statements are proven.
std::vector<LemmaResult> lemma_suite(const PropertySpec &pi, const LemmaSuiteConfig &config = {});

LemmaResult check_cutvertex_additivity(const PropertySpec &pi, const LemmaSuiteConfig &config);
LemmaResult check_half_lemma(const PropertySpec &pi, const LemmaSuiteConfig &config);
LemmaResult check_almost_clique_floor(const PropertySpec &pi);
LemmaResult check_clique_growth(const PropertySpec &pi);
LemmaResult check_nonleaf_blocks(const PropertySpec &pi, const LemmaSuiteConfig &config);
/// Oriented, λ = 1/2, hereditary: the triangle implications and ex(K_j) > 0 for j ≠ 3.
LemmaResult check_oriented_triangle_lemmas(const PropertySpec &pi);
/// λ ≠ 1/2 or all triangles in Π: ex(K_i) > 0 for 2 <= i <= cap.
LemmaResult check_positive_cliques(const PropertySpec &pi);

/// Poljak-Turzik: ms >= pt on every connected graph with <= n_simple vertices, and on every
/// decoration with <= n_variants vertices for non-simple classes.
LemmaResult check_poljak_turzik(const PropertySpec &pi, int n_simple, int n_variants);

/// Rule 1 / Rule 2 instances with a known modulator and a pattern that the rule can use.
struct RuleInstance {
    Graph g;
    std::vector<Vertex> s;
};

/// Tree of cliques with at least one cyclic triangle hanging off a cut vertex.
RuleInstance rule1_pattern(std::uint64_t seed, int n_max);

/// Two cyclic triangles meeting in v inside a path of blocks, with S kept away from them.
/// When `split` is set, v separates G; otherwise an S-vertex reconnects the two sides.
RuleInstance rule2_pattern(std::uint64_t seed, int n_max, bool split);

struct RuleValidityReport {
    int rule1_instances = 0, rule1_applications = 0;
    int rule2_instances = 0, rule2_identified = 0, rule2_decremented = 0;
    std::vector<std::string> counterexamples;
};

/// Brute-force excess before and after each rule application on `instances` seeded patterns.
RuleValidityReport rule_validity_suite(std::uint64_t seed, int instances, int n_max);

/// Whole-graph excess without block decomposition (edge-subset search).
Rational brute_excess(const Graph &g, const PropertySpec &pi);

} // namespace apt

namespace apt {

/// The seeded corpus instance used by `verify`, `bench` and the acceptance run: a tree of
/// 2..6 cliques of order 1..4 with up to two extra vertices attached at random.
/// Oriented classes make each triangle block cyclic with probability 1/2.
Instance corpus_instance(const PropertySpec &pi, std::uint64_t seed, const Rational &k);

} // namespace apt
