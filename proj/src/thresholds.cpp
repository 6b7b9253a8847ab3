#include "apt/thresholds.hpp"

namespace apt {

std::vector<std::pair<std::string, Rational>> Thresholds::named() const {
    return {{"dangling", dangling},   {"star", star},         {"sneighbor", sneighbor},
            {"components", components}, {"nonpath", nonpath}, {"posblocks", posblocks},
            {"large_cliques", large_cliques}, {"interior", interior}, {"q0", q0}};
}

Thresholds thresholds(const PropertyConstants &c, const Rational &k) {
    const Rational one_minus = 1 - c.lambda.value();
    const Rational inf = c.inf_ak;
    const Rational s_size = 6 * k / one_minus;  // modulator size limit
    const Rational leaf_rate = 16 / one_minus + 2 / inf;

    Thresholds t;
    t.dangling = k / inf;
    t.star = leaf_rate * k - 2;
    t.sneighbor = t.star * s_size;
    t.components = t.sneighbor + k / inf;
    t.nonpath = 4 * t.components;
    t.posblocks = (leaf_rate * k - 1) * s_size / inf + k / (inf * inf) + (k - 1) / inf;
    t.large_cliques = (leaf_rate * k - 1) * s_size / c.a + k / (c.a * inf) + (k - 1) / c.a;
    t.interior = Rational(ceil(4 * k / c.a + one_minus / (2 * c.a))) * c.j;
    t.q0 = t.nonpath + 4 * k;
    return t;
}

const char *to_string(KernelCase c) { return c == KernelCase::Quadratic ? "quadratic" : "cubic"; }

CubicTerms cubic_terms(const PropertyConstants &c, const Rational &k) {
    Thresholds t = thresholds(c, k);
    const Rational s_size = 6 * k / (1 - c.lambda.value());
    CubicTerms ct;
    ct.nonpath = t.nonpath;
    ct.b2plus = t.posblocks;
    ct.b2prime = t.sneighbor;
    ct.q0ns = s_size * t.q0;
    ct.b2dp = 2 * (ct.nonpath + ct.b2plus + ct.b2prime + ct.q0ns);
    ct.b2tp = ct.nonpath + ct.b2plus + ct.b2prime + ct.b2dp;
    ct.blocks = ct.nonpath + ct.b2plus + ct.b2prime + ct.b2dp + ct.b2tp;
    return ct;
}

std::int64_t kernel_size_bound(const PropertyConstants &c, const Rational &k, KernelCase which) {
    Thresholds t = thresholds(c, k);
    const Rational s_size = 6 * k / (1 - c.lambda.value());
    if (which == KernelCase::Quadratic) {
        // Singleton blocks, small positive-excess blocks, and blocks of at least j vertices.
        Rational bound = s_size + t.components + (c.j - 1) * t.posblocks + 2 * c.j * t.large_cliques;
        return floor(bound);
    }
    CubicTerms ct = cubic_terms(c, k);
    // Big blocks carry at most t.interior interior vertices each, cut vertices are fewer
    // than blocks, and every zero-excess path block is a triangle.
    Rational bound = s_size + (ct.nonpath + ct.b2plus) * t.interior + ct.blocks +
                     3 * (ct.b2prime + ct.b2dp + ct.b2tp);
    return floor(bound);
}

} // namespace apt
