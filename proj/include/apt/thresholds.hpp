#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "apt/excess.hpp"
#include "apt/rational.hpp"

namespace apt {

/// YES-thresholds at a given k. A count reaching its threshold certifies a YES-instance.
struct Thresholds {
    Rational dangling;     // number of dangling components
    Rational star;         // blocks with an interior neighbour of a single s
    Rational sneighbor;    // the same count summed over S
    Rational components;   // components of G - S (bound only)
    Rational nonpath;      // |B0| + |B1| + |B>=3| (bound only)
    Rational posblocks;    // blocks of G - S with positive excess
    Rational large_cliques;  // Σ floor(|B|/j) over blocks with at least j vertices
    Rational interior;     // |int(B)| of a single block
    Rational q0;           // |Q0 ∩ N(s)| for one s (oriented, λ = 1/2)

    /// Name/value pairs in a fixed order, for reports.
    std::vector<std::pair<std::string, Rational>> named() const;
};

Thresholds thresholds(const PropertyConstants &c, const Rational &k);

enum class KernelCase { Quadratic, Cubic };

const char *to_string(KernelCase c);

struct CubicTerms {
    Rational nonpath, b2plus, b2prime, q0ns, b2dp, b2tp, blocks;
};

/// Block-class budgets behind the cubic bound.
CubicTerms cubic_terms(const PropertyConstants &c, const Rational &k);

/// Explicit vertex bound on a reduced non-YES instance, rounded down.
std::int64_t kernel_size_bound(const PropertyConstants &c, const Rational &k, KernelCase which);

} // namespace apt
