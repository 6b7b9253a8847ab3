#include <doctest.h>

#include "apt/axioms.hpp"
#include "apt/blocks.hpp"

using namespace apt;

TEST_CASE("built-ins satisfy the axioms exhaustively") {
    for (const PropertySpec &pi : {bipartite_property(), q_colorable_property(3)}) {
        AxiomReport r = check_axioms(pi, 5);
        CHECK_MESSAGE(r.inclusiveness.passed(), pi.name);
        CHECK_MESSAGE(r.block_additivity.passed(), pi.name);
        CHECK_MESSAGE(r.subgraph_extension.passed(), pi.name);
        CHECK(r.subgraph_extension.cases_checked > 0);
    }
    AxiomReport acyc = check_axioms(acyclic_oriented_property(), 4);
    CHECK(acyc.all_passed());
}

TEST_CASE("an even-edge-count oracle breaks block additivity") {
    PropertySpec even;
    even.name = "even-edges";
    even.lambda = Lambda(Rational(1, 2));
    even.graph_class = GraphClass::simple();
    even.membership = [](const Graph &g) { return g.edge_count() % 2 == 0; };
    AxiomReport r = check_axioms(even, 4);
    CHECK_FALSE(r.block_additivity.passed());
    CHECK_FALSE(r.inclusiveness.passed());  // K2 has one edge
    // The reported graph really is a counterexample: e.g. a path with 2 edges has odd blocks.
    Graph p = path_graph(3);
    bool whole = even.contains(p);
    bool blocks_ok = true;
    for (const auto &b : block_decomposition(p).blocks)
        blocks_ok = blocks_ok && even.contains(induced_subgraph(p, b));
    CHECK(whole != blocks_ok);
}

TEST_CASE("hereditary checks") {
    CHECK(is_hereditary_upto(bipartite_property(), 5).hereditary);
    CHECK(is_hereditary_upto(acyclic_oriented_property(), 4).hereditary);

    PropertySpec toy;
    toy.name = "connected-two-edges";
    toy.lambda = Lambda(Rational(1, 2));
    toy.graph_class = GraphClass::simple();
    toy.membership = [](const Graph &g) { return g.is_connected() && g.edge_count() >= 2; };
    HereditaryReport r = is_hereditary_upto(toy, 4);
    CHECK_FALSE(r.hereditary);
    CHECK(r.counterexample.has_value());
}

TEST_CASE("default enumeration sizes") {
    CHECK(default_axiom_n_max(GraphClass::simple()) == 5);
    CHECK(default_axiom_n_max(GraphClass::oriented()) == 4);
}
