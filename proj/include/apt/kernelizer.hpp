#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "apt/blocks.hpp"
#include "apt/excess.hpp"
#include "apt/graph.hpp"
#include "apt/modulator.hpp"
#include "apt/property.hpp"
#include "apt/rational.hpp"
#include "apt/thresholds.hpp"

namespace apt {

/// An APT(Π) instance: does G have a spanning Π-subgraph with at least pt(G) + k edges?
struct Instance {
    Graph g;
    Rational k;
    PropertySpec pi;
};

/// Throws std::invalid_argument unless G is connected, belongs to Π's graph class, and
/// k has a denominator dividing 4.
void validate_instance(const Instance &inst);

/// Graph, parameter and modulator as they evolve under the reduction rules.
struct ReductionState {
    Graph g;
    Rational k;
    std::vector<Vertex> s;  // sorted; G - S is a forest of cliques
};

class PreconditionViolated : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class BoundViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Which branch of the case analysis an instance falls under.
enum class DispatchCase {
    Quadratic,        // λ ≠ 1/2, or every decoration of K3 is in Π
    MaxCutDelegate,   // λ = 1/2 on simple/oriented graphs, hereditary, no triangle in Π
    OrientedCubic,    // λ = 1/2 oriented hereditary, transitive triangle in Π, cyclic not
    Outside,          // everything else
};

const char *to_string(DispatchCase c);

DispatchCase dispatch_case(const PropertySpec &pi);

/// True when the dangling component (closure given in vertex ids of `g`) has zero excess.
/// Components with at least j + 1 vertices are positive without search.
bool zero_excess_almost_clique(const Graph &g, std::span<const Vertex> vertices, const PropertySpec &pi,
                               const PropertyConstants &c);

/// Applies Rule 1 exhaustively: repeatedly deletes the body of a zero-excess dangling
/// component while G has at least two blocks. k is unchanged. Returns the number of applications.
int apply_rule1(ReductionState &state, const PropertySpec &pi, const PropertyConstants &c);

/// Rule 1 on a bare instance (no modulator to carry along).
Instance rule1_zero_excess_dangling(const Instance &inst, const PropertyConstants &c);

/// Two cyclic-triangle path blocks B1, B2 of G - S meeting in v, with v and both interiors
/// outside N(S). w_i is the interior of B_i and u_i its remaining vertex.
struct Rule2Match {
    Vertex v, w1, w2, u1, u2;
};

bool is_cyclic_triangle(const Graph &g, std::span<const Vertex> vertices);

/// First match in order of v, or none.
std::optional<Rule2Match> find_rule2(const Graph &g, std::span<const Vertex> s);

enum class Rule2Kind { Identified, Decremented };

/// Applies Rule 2 at `m`. Identified: G - v was disconnected, u1 and u2 merged, k kept.
/// Decremented: k reduced by 1/4. Throws PreconditionViolated if `m` is not a match.
Rule2Kind apply_rule2(ReductionState &state, const Rule2Match &m);

/// Rule 2 on a bare instance with the given modulator; the rule must be applicable.
Instance rule2_triangle_path(const Instance &inst, std::span<const Vertex> s, const Rule2Match &m,
                             Rule2Kind *kind = nullptr);

/// Zero-excess path blocks with no interior S-neighbour, and the cut vertices lying only in them.
struct B2ZeroSets {
    std::vector<int> b2_zero;  // block ids of the classification
    std::vector<Vertex> q0;
};

/// Split of the path blocks used by the cubic count.
struct B2Partition {
    std::vector<int> plus;    // positive excess
    std::vector<int> prime;   // zero excess, an interior vertex in N(S)
    std::vector<int> dprime;  // zero excess, no interior S-neighbour, a cut vertex in N(S)
    std::vector<int> tprime;  // zero excess, no S-neighbour at all
};

/// Per-block excess sign for the blocks of G - S, with the ≥ j + 1 shortcut.
std::vector<bool> positive_blocks(const Graph &g, const ClassifiedBlocks &cb, const PropertySpec &pi,
                                  const PropertyConstants &c);

/// Vertices outside S with a neighbour in S.
std::vector<char> s_neighbourhood(const Graph &g, std::span<const Vertex> s);

B2ZeroSets b2_zero_sets(const Graph &g, std::span<const Vertex> s, const ClassifiedBlocks &cb,
                        const std::vector<bool> &positive);

B2Partition b2_partition(const Graph &g, std::span<const Vertex> s, const ClassifiedBlocks &cb,
                         const std::vector<bool> &positive);

struct YesWitness {
    std::string lemma;   // short tag of the argument that certified the answer
    std::string detail;
    Rational count;      // the measured quantity (0 for trivial)
    Rational threshold;
    std::optional<Vertex> center;    // s for the per-s checks
    std::vector<Vertex> structure;   // e.g. interior vertices or roots, ids of the reduced graph
};

/// Evaluates the YES-thresholds in order and returns the first that fires.
std::optional<YesWitness> yes_checks(const ReductionState &state, const PropertySpec &pi,
                                     const PropertyConstants &c, DispatchCase which);

struct KernelStats {
    std::string dispatch;
    int n_in = 0, m_in = 0;
    std::optional<int> modulator_size;
    std::string modulator_method;
    int rule1_applications = 0;
    int rule2_identified = 0;
    int rule2_decremented = 0;
    std::optional<B2Partition> partition;  // cubic case, on the reduced instance
    std::optional<ClassifiedBlocks> blocks;
};

struct YesOutcome {
    YesWitness witness;
};

struct KernelOutcome {
    Graph g;
    Rational k;
    std::vector<Vertex> s;
    KernelCase kind;
    std::int64_t bound;
};

struct UnsupportedOutcome {
    std::string reason;
};

struct ModulatorTooLargeOutcome {
    std::size_t s_size;
    Rational limit;  // 6k/(1-λ)
    std::string diagnostic;
};

struct Outcome {
    std::variant<YesOutcome, KernelOutcome, UnsupportedOutcome, ModulatorTooLargeOutcome> value;
    KernelStats stats;

    /// "yes", "kernel", "unsupported" or "modulator-too-large".
    std::string tag() const;
    bool is_yes() const { return std::holds_alternative<YesOutcome>(value); }
    bool is_kernel() const { return std::holds_alternative<KernelOutcome>(value); }
};

struct KernelOptions {
    /// Precomputed constants for Π; computed on demand otherwise.
    std::optional<PropertyConstants> constants;
};

/// The full pipeline. Throws BoundViolation if a reduced instance on which no threshold
/// fires is larger than the kernel bound.
Outcome kernelize(const Instance &inst, const KernelOptions &options = {});

inline constexpr const char *kDelegateReason = "delegate: Max-Cut ATLB kernel external";
inline constexpr const char *kOutsideReason = "outside Theorem 1";

} // namespace apt
