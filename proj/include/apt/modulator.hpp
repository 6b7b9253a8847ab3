#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "apt/graph.hpp"
#include "apt/rational.hpp"

namespace apt {

enum class ModulatorMethod { Greedy, ExactSearch };

const char *to_string(ModulatorMethod m);

/// A vertex set S with G - S a forest of cliques.
struct Modulator {
    std::vector<Vertex> s;  // sorted
    ModulatorMethod method = ModulatorMethod::Greedy;
    bool size_ok = false;   // filled in by callers that know k and λ
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest graph the exact subset search accepts.
inline constexpr int kExactModulatorCap = 20;

/// Greedy destruction of non-clique blocks, falling back to exact search over subsets
/// of size <= budget when the greedy set is larger than `budget`. If the exact search
/// finds nothing within budget the greedy set is returned unchanged.
/// Throws BudgetExceeded if the exact phase is needed on more than kExactModulatorCap vertices.
Modulator find_modulator(const Graph &g, int budget);

/// Only the greedy phase.
Modulator greedy_modulator(const Graph &g);

/// Smallest modulator by exhaustive search in increasing size, at most `limit` vertices
/// (no limit when negative). Returns an empty optional if none exists within the limit.
std::optional<Modulator> exact_modulator(const Graph &g, int limit = -1);

/// Largest |S| that passes the gate: the greatest integer strictly below 6k/(1-λ).
int modulator_budget(const Rational &k, const Lambda &lambda);

enum class Gate { Proceed, TooLarge };

/// Proceed iff |S| < 6k/(1-λ), compared exactly.
Gate modulator_gate(std::size_t s_size, const Rational &k, const Lambda &lambda);

} // namespace apt
