#include <doctest.h>

#include "apt/blocks.hpp"
#include "apt/enumerate.hpp"
#include "apt/modulator.hpp"
#include "brute.hpp"

using namespace apt;

TEST_CASE("forest of cliques needs no modulator") {
    Graph g = path_graph(5);
    CHECK(greedy_modulator(g).s.empty());
    CHECK(find_modulator(g, 0).s.empty());
}

TEST_CASE("C4 needs one vertex") {
    Graph c4 = cycle_graph(4);
    for (Vertex v = 0; v < 4; ++v) {
        Vertex gone[] = {v};
        CHECK(is_forest_of_cliques(delete_vertices(c4, gone)));
    }
    auto m = exact_modulator(c4);
    REQUIRE(m);
    CHECK(m->s.size() == 1);
    CHECK(greedy_modulator(c4).s.size() == 1);
}

TEST_CASE("C5 with a chord forming a C4 block") {
    Graph g = cycle_graph(5);
    g.add_edge(0, 2);  // triangle 0-1-2 and C4 0-2-3-4
    auto m = exact_modulator(g, 1);
    REQUIRE(m);
    CHECK(m->s.size() == 1);
    CHECK(is_forest_of_cliques(delete_vertices(g, m->s)));
}

TEST_CASE("exact modulators are minimum on all connected graphs up to 7 vertices") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph &g : connected_graphs_of_order(n)) {
            auto m = exact_modulator(g);
            REQUIRE(m);
            REQUIRE(static_cast<int>(m->s.size()) == brute::min_modulator_size(g));
            Modulator greedy = greedy_modulator(g);
            REQUIRE(is_forest_of_cliques(delete_vertices(g, greedy.s)));
        }
}

TEST_CASE("find_modulator falls back to exact search within budget") {
    // Wheel on 6 rim vertices: greedy may overshoot, exact finds the hub plus one rim vertex.
    Graph w(7);
    for (int i = 0; i < 6; ++i) {
        w.add_edge(6, i);
        w.add_edge(i, (i + 1) % 6);
    }
    int best = brute::min_modulator_size(w);
    Modulator m = find_modulator(w, best);
    CHECK(static_cast<int>(m.s.size()) <= best);
    CHECK(is_forest_of_cliques(delete_vertices(w, m.s)));
}

TEST_CASE("exact phase is capped") {
    Graph big = cycle_graph(24);
    CHECK_THROWS_AS(exact_modulator(big), BudgetExceeded);
    // Greedy alone succeeds; a budget of 1 forces the exact phase.
    CHECK(greedy_modulator(big).s.size() == 1);
    Graph wheel(22);
    for (int i = 0; i < 21; ++i)
        wheel.add_edge(i, (i + 1) % 21);
    for (int i = 0; i < 21; i += 3)
        wheel.add_edge(21, i);
    CHECK_THROWS_AS(find_modulator(wheel, 0), BudgetExceeded);
}

TEST_CASE("gate compares exactly") {
    CHECK(modulator_gate(3, 1, Lambda(Rational(1, 2))) == Gate::Proceed);
    CHECK(modulator_gate(12, 1, Lambda(Rational(1, 2))) == Gate::TooLarge);
    CHECK(modulator_gate(5, 1, Lambda(Rational(2, 3))) == Gate::Proceed);
    CHECK(modulator_budget(1, Lambda(Rational(1, 2))) == 11);
    CHECK(modulator_budget(Rational(1, 4), Lambda(Rational(1, 2))) == 2);
    CHECK(modulator_budget(Rational(1, 3), Lambda(Rational(2, 3))) == 5);
}
