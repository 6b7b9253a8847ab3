#include <doctest.h>

#include <cmath>

#include "apt/kernelizer.hpp"
#include "apt/oracle.hpp"
#include "brute.hpp"

using namespace apt;

namespace {

// Directed triangle a -> b -> c -> a.
void cyclic(Graph &g, Vertex a, Vertex b, Vertex c) {
    g.add_arc(a, b);
    g.add_arc(b, c);
    g.add_arc(c, a);
}

// x1 - u1 - [u1 w1 v] - [v w2 u2] - u2 - x2, two cyclic triangles meeting in v.
// Ids: x1=0 u1=1 w1=2 v=3 w2=4 u2=5 x2=6, optional s=7 joined to x1 and x2.
Graph triangle_path(bool with_s) {
    Graph g(with_s ? 8 : 7, GraphClass::oriented());
    g.add_arc(0, 1);
    cyclic(g, 1, 2, 3);
    cyclic(g, 3, 4, 5);
    g.add_arc(5, 6);
    if (with_s) {
        g.add_arc(7, 0);
        g.add_arc(7, 6);
    }
    return g;
}

const PropertyConstants &acyclic_constants() {
    static const PropertyConstants c = property_constants(acyclic_oriented_property());
    return c;
}

const PropertyConstants &qcol_constants() {
    static const PropertyConstants c = property_constants(q_colorable_property(3));
    return c;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

} // namespace

TEST_CASE("dispatch") {
    CHECK(dispatch_case(q_colorable_property(3)) == DispatchCase::Quadratic);
    CHECK(dispatch_case(bipartite_property()) == DispatchCase::MaxCutDelegate);
    CHECK(dispatch_case(acyclic_oriented_property()) == DispatchCase::OrientedCubic);
    CHECK(dispatch_case(balanced_signed_property()) == DispatchCase::Outside);
}

TEST_CASE("unsupported branches carry their reasons") {
    Outcome o = kernelize(Instance{complete_graph(3), 1, bipartite_property()});
    REQUIRE(std::holds_alternative<UnsupportedOutcome>(o.value));
    CHECK(std::get<UnsupportedOutcome>(o.value).reason == kDelegateReason);
    CHECK(o.tag() == "unsupported");

    Graph signed_k3 = complete_graph(3, GraphClass::labelled(2));
    Outcome s = kernelize(Instance{signed_k3, 1, balanced_signed_property()});
    REQUIRE(std::holds_alternative<UnsupportedOutcome>(s.value));
    CHECK(std::get<UnsupportedOutcome>(s.value).reason == kOutsideReason);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate_instance(Instance{Graph(2), 1, q_colorable_property(3)}), std::invalid_argument);
    CHECK_THROWS_AS(validate_instance(Instance{complete_graph(2), Rational(1, 3), q_colorable_property(3)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_instance(Instance{complete_graph(2), 1, acyclic_oriented_property()}),
                    std::invalid_argument);
    CHECK_NOTHROW(validate_instance(Instance{complete_graph(2), Rational(3, 4), q_colorable_property(3)}));
}

TEST_CASE("trivial yes for k <= 0") {
    Outcome o = kernelize(Instance{complete_graph(2), 0, q_colorable_property(3)});
    CHECK(o.is_yes());
}

TEST_CASE("rule 1 removes a zero-excess dangling triangle") {
    const PropertySpec pi = acyclic_oriented_property();
    // Transitive triangle 0,1,2 and cyclic triangle 2,3,4 sharing vertex 2.
    Graph g(5, GraphClass::oriented());
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    g.add_arc(0, 2);
    cyclic(g, 2, 3, 4);
    CHECK(brute_excess(g, pi) == 1);

    ReductionState st{g, 1, {}};
    CHECK(apply_rule1(st, pi, acyclic_constants()) == 1);
    CHECK(st.g.vertex_count() == 3);
    CHECK(st.g.edge_count() == 3);
    CHECK(brute_excess(st.g, pi) == 1);

    // A single block is never reduced.
    Graph tri(3, GraphClass::oriented());
    cyclic(tri, 0, 1, 2);
    ReductionState lone{tri, 1, {}};
    CHECK(apply_rule1(lone, pi, acyclic_constants()) == 0);
}

TEST_CASE("rule 1 removes two dangling cyclic triangles in sequence") {
    const PropertySpec pi = acyclic_oriented_property();
    // Path 0 -> 1 -> 2 with cyclic triangles hanging at 0 and at 2.
    Graph g(7, GraphClass::oriented());
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    cyclic(g, 0, 3, 4);
    cyclic(g, 2, 5, 6);
    const Rational before = brute_excess(g, pi);
    ReductionState st{g, 1, {}};
    CHECK(apply_rule1(st, pi, acyclic_constants()) == 2);
    CHECK(st.g.vertex_count() == 3);
    CHECK(st.g.is_connected());
    CHECK(brute_excess(st.g, pi) == before);
    CHECK(st.k == 1);
}

TEST_CASE("rule 1 leaves positive dangling components alone") {
    const PropertySpec pi = q_colorable_property(3);
    ReductionState st{star(4), 1, {}};
    CHECK(apply_rule1(st, pi, qcol_constants()) == 0);
    CHECK(st.g.vertex_count() == 5);
}

TEST_CASE("rule 2 identifies across a cut vertex") {
    const PropertySpec pi = acyclic_oriented_property();
    Graph g = triangle_path(false);
    auto m = find_rule2(g, {});
    REQUIRE(m);
    CHECK(m->v == 3);
    Rule2Kind kind;
    Instance after = rule2_triangle_path(Instance{g, 1, pi}, {}, *m, &kind);
    CHECK(kind == Rule2Kind::Identified);
    CHECK(after.k == 1);
    CHECK(after.g.vertex_count() == 3);
    CHECK(after.g.is_connected());
    CHECK(brute_excess(after.g, pi) == brute_excess(g, pi));
}

TEST_CASE("rule 2 decrements when an S vertex reconnects the sides") {
    const PropertySpec pi = acyclic_oriented_property();
    Graph g = triangle_path(true);
    std::vector<Vertex> s{7};
    auto m = find_rule2(g, s);
    REQUIRE(m);
    ReductionState st{g, 1, s};
    CHECK(apply_rule2(st, *m) == Rule2Kind::Decremented);
    CHECK(st.k == Rational(3, 4));
    CHECK(st.g.vertex_count() == 5);
    CHECK(st.s.size() == 1);
    CHECK(brute_excess(g, pi) - brute_excess(st.g, pi) == Rational(1, 4));
}

TEST_CASE("rule 2 does not fire next to S") {
    Graph g = triangle_path(true);
    g.add_arc(7, 2);  // s sees w1
    std::vector<Vertex> s{7};
    CHECK_FALSE(find_rule2(g, s));

    ReductionState st{g, 1, s};
    CHECK_THROWS_AS(apply_rule2(st, Rule2Match{3, 2, 4, 1, 5}), PreconditionViolated);
}

TEST_CASE("transitive triangles block rule 2") {
    Graph g = triangle_path(false);
    g.set_direction(*g.edge_index(1, 3), Direction::Forward);  // 1 -> 3 makes {1,2,3} transitive
    CHECK_FALSE(find_rule2(g, {}));
}

TEST_CASE("dangling bound fires at k / inf") {
    const PropertySpec pi = q_colorable_property(3);
    const PropertyConstants &c = qcol_constants();
    ReductionState six{star(6), 1, {}};
    auto w = yes_checks(six, pi, c, DispatchCase::Quadratic);
    REQUIRE(w);
    CHECK(w->lemma == "danglingbound");
    CHECK(w->count == 6);
    CHECK(w->threshold == 6);
    CHECK(solve_apt(Instance{star(6), 1, pi}));

    ReductionState five{star(5), 1, {}};
    CHECK_FALSE(yes_checks(five, pi, c, DispatchCase::Quadratic));
    Outcome o = kernelize(Instance{star(5), 1, pi});
    REQUIRE(o.is_kernel());
    CHECK_FALSE(solve_apt(Instance{star(5), 1, pi}));
}

TEST_CASE("bounds grow quadratically and cubically") {
    auto slope = [](const PropertyConstants &c, KernelCase which) {
        double lo = static_cast<double>(kernel_size_bound(c, 50, which));
        double hi = static_cast<double>(kernel_size_bound(c, 100, which));
        return std::log2(hi / lo);
    };
    CHECK(slope(qcol_constants(), KernelCase::Quadratic) == doctest::Approx(2.0).epsilon(0.05));
    CHECK(slope(acyclic_constants(), KernelCase::Cubic) == doctest::Approx(3.0).epsilon(0.05));
    CHECK(kernel_size_bound(qcol_constants(), 1, KernelCase::Quadratic) <
          kernel_size_bound(qcol_constants(), 2, KernelCase::Quadratic));
}

TEST_CASE("threshold values at k = 1") {
    Thresholds t = thresholds(qcol_constants(), 1);
    CHECK(t.dangling == 6);
    // rate = 16/(1/3) + 2/(1/6) = 60; star = 58
    CHECK(t.star == 58);
    CHECK(t.sneighbor == 58 * 18);
    Thresholds a = thresholds(acyclic_constants(), 1);
    CHECK(a.dangling == 4);
    CHECK(a.star == 38);
    CHECK(a.interior == 4 * 5);  // ceil(4 + 1/4) * j
}

TEST_CASE("path-block partition is a partition") {
    const PropertySpec pi = acyclic_oriented_property();
    const PropertyConstants &c = acyclic_constants();
    int with_paths = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Instance inst = corpus_instance(pi, seed, 1);
        Modulator m = greedy_modulator(inst.g);
        ClassifiedBlocks cb = classify_blocks(inst.g, m.s);
        std::vector<bool> pos = positive_blocks(inst.g, cb, pi, c);
        B2Partition p = b2_partition(inst.g, m.s, cb, pos);
        std::vector<int> all;
        for (const auto *part : {&p.plus, &p.prime, &p.dprime, &p.tprime})
            all.insert(all.end(), part->begin(), part->end());
        std::sort(all.begin(), all.end());
        REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
        REQUIRE(all == cb.blocks_in(BlockClass::Path));
        with_paths += !all.empty();
        for (int b : p.plus)
            REQUIRE(pos[b]);
        B2ZeroSets z = b2_zero_sets(inst.g, m.s, cb, pos);
        REQUIRE(z.b2_zero.size() == p.dprime.size() + p.tprime.size());
    }
    CHECK(with_paths > 0);
}
