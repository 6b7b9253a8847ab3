#include <doctest.h>

#include "apt/blocks.hpp"
#include "apt/enumerate.hpp"
#include "apt/excess.hpp"
#include "apt/generators.hpp"
#include "brute.hpp"

using namespace apt;

namespace {

Graph cyclic_triangle() { return cycle_graph(3, GraphClass::oriented()); }

Graph transitive_triangle() {
    Graph g(3, GraphClass::oriented());
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    g.add_arc(0, 2);
    return g;
}

} // namespace

TEST_CASE("pt values") {
    CHECK(pt(3, 3, Lambda(Rational(1, 2))) == 2);
    CHECK(pt(1, 0, Lambda(Rational(1, 2))) == 0);
    CHECK(pt(4, 6, Lambda(Rational(2, 3))) == Rational(9, 2));
}

TEST_CASE("ms against brute force over edge subsets") {
    const PropertySpec bip = bipartite_property();
    const PropertySpec q3 = q_colorable_property(3);
    CHECK(ms(complete_graph(3), bip) == 2);
    CHECK(brute::ms(complete_graph(3), bip) == 2);
    CHECK(ms(complete_graph(5), bip) == 6);
    CHECK(brute::max_cut(complete_graph(5)) == 6);
    CHECK(ms(complete_graph(4), q3) == 5);
    CHECK(brute::ms(complete_graph(4), q3) == 5);
}

TEST_CASE("exact solvers agree with subset search on random graphs") {
    Rng rng(5);
    const PropertySpec bip = bipartite_property();
    const PropertySpec q3 = q_colorable_property(3);
    const PropertySpec q4 = q_colorable_property(4);
    const PropertySpec acyc = acyclic_oriented_property();
    const PropertySpec sig = balanced_signed_property();
    for (int i = 0; i < 150; ++i) {
        int n = rng.between(2, 7);
        Graph h = random_connected_gnp(n, 0.5, rng);
        if (h.edge_count() > 14)
            continue;
        CHECK(max_cut(h) == brute::max_cut(h));
        CHECK(max_q_colorable_subgraph(h, 3) == brute::ms(h, q3));
        CHECK(max_q_colorable_subgraph(h, 4) == brute::ms(h, q4));
        CHECK(ms(h, bip) == brute::ms(h, bip));
        Graph o = decorate(h, GraphClass::oriented(), VariantPolicy{0.0, true, false}, rng);
        CHECK(max_acyclic_subgraph(o) == brute::ms(o, acyc));
        Graph s = decorate(h, GraphClass::labelled(2), {}, rng);
        CHECK(max_balanced_subgraph(s) == brute::ms(s, sig));
    }
}

TEST_CASE("excess values") {
    CHECK(excess(complete_graph(3), bipartite_property()).ex == 0);
    CHECK(excess(complete_graph(4), bipartite_property()).ex == Rational(1, 4));
    CHECK(excess(complete_graph(3), q_colorable_property(3)).ex == Rational(2, 3));
    const PropertySpec acyc = acyclic_oriented_property();
    CHECK(excess(cyclic_triangle(), acyc).ex == 0);
    CHECK(excess(transitive_triangle(), acyc).ex == 1);
}

TEST_CASE("ex_clique") {
    for (const PropertySpec &pi : {bipartite_property(), q_colorable_property(3), q_colorable_property(5),
                                   acyclic_oriented_property(), balanced_signed_property()})
        CHECK(ex_clique(2, pi) == pi.lambda.half_complement());
    const PropertySpec acyc = acyclic_oriented_property();
    CHECK(ex_clique(3, acyc) == 0);
    CHECK(ex_clique(4, acyc) == Rational(5, 4));
    // Confirm the K4 value directly over all 64 tournaments.
    Rational lowest = 100;
    int count = 0;
    for_each_variant(complete_graph(4), GraphClass::oriented(), [&](const Graph &g) {
        lowest = std::min(lowest, brute::ex(g, acyc));
        ++count;
        return true;
    });
    CHECK(count == 64);
    CHECK(lowest == Rational(5, 4));
    CHECK_THROWS_AS(ex_clique(6, acyc), CliqueTooLarge);
}

TEST_CASE("divergence witnesses and inf_AK") {
    auto w3 = divergence_witness(q_colorable_property(3));
    REQUIRE(w3);
    CHECK(w3->j == 3);
    CHECK(w3->a == Rational(1, 2));
    CHECK_FALSE(divergence_witness(bipartite_property()).has_value());
    for (int j = 2; j <= 8; ++j)
        CHECK(ex_clique(j, bipartite_property()) == (j % 2 ? Rational(0) : Rational(1, 4)));

    auto wa = divergence_witness(acyclic_oriented_property());
    REQUIRE(wa);
    CHECK(wa->j == 4);
    CHECK(wa->a == 1);

    PropertyConstants q = property_constants(q_colorable_property(3));
    CHECK(q.inf_ak == Rational(1, 6));
    // P3 = K3 minus an edge has excess 1/3 under 3-colourability.
    CHECK(excess(path_graph(3), q_colorable_property(3)).ex == Rational(1, 3));

    // Acyclic: smallest positive excess over oriented almost-cliques with at most 4 vertices.
    const PropertySpec acyc = acyclic_oriented_property();
    Rational smallest = 100;
    for (int t = 2; t <= 4; ++t)
        for (const Graph &shape : connected_almost_cliques(t))
            for_each_variant(shape, GraphClass::oriented(), [&](const Graph &g) {
                Rational ex = brute::ex(g, acyc);
                if (ex > 0)
                    smallest = std::min(smallest, ex);
                return true;
            });
    PropertyConstants a = property_constants(acyc);
    CHECK(a.inf_ak == std::min(smallest, Rational(1)));
    CHECK(a.inf_ak == Rational(1, 4));
    CHECK_THROWS_AS(property_constants(bipartite_property()), NoDivergenceWitness);
}

TEST_CASE("connected almost-cliques are exactly the almost-cliques up to isomorphism") {
    for (int t = 2; t <= 6; ++t) {
        std::size_t count = 0;
        for (const Graph &g : connected_graphs_of_order(t))
            count += is_almost_clique(g);
        CHECK(connected_almost_cliques(t).size() == count);
    }
}

TEST_CASE("triangle membership") {
    CHECK(triangle_membership(q_colorable_property(3)).membership == TriangleMembership::All);
    CHECK(triangle_membership(bipartite_property()).membership == TriangleMembership::None);
    TriangleReport acyc = triangle_membership(acyclic_oriented_property());
    CHECK(acyc.membership == TriangleMembership::Partial);
    CHECK(acyc.transitive_member());
    CHECK_FALSE(acyc.cyclic_member());
    CHECK(triangle_membership(balanced_signed_property()).membership == TriangleMembership::Partial);
}

TEST_CASE("ex(K3) = 2 - 2 lambda for q-colourability") {
    for (int q = 3; q <= 6; ++q) {
        PropertySpec pi = q_colorable_property(q);
        CHECK(excess(complete_graph(3), pi).ex == 2 - 2 * pi.lambda.value());
    }
}

TEST_CASE("Poljak-Turzik on small connected graphs") {
    for (const PropertySpec &pi : {bipartite_property(), q_colorable_property(3)})
        for (const Graph &g : all_connected_graphs(6))
            REQUIRE(ms(g, pi) >= pt(g, pi.lambda));
    const PropertySpec acyc = acyclic_oriented_property();
    for (const Graph &h : all_connected_graphs(4))
        for_each_variant(h, GraphClass::oriented(), [&](const Graph &g) {
            REQUIRE(ms(g, acyc) >= pt(g, acyc.lambda));
            return true;
        });
}

TEST_CASE("ms by blocks equals whole-graph search") {
    Rng rng(8);
    const PropertySpec q3 = q_colorable_property(3);
    for (int i = 0; i < 100; ++i) {
        ForestOfCliquesPlusS f{random_clique_sizes(rng.between(2, 5), 2, 4, rng), rng.between(0, 1), 0.3};
        Graph g = forest_of_cliques_plus_s(f, GraphClass::simple(), {}, rng).g;
        if (g.edge_count() > 16)
            continue;
        CHECK(ms(g, q3) == ms_by_subsets(g, q3));
    }
}

TEST_CASE("block-wise excess equals whole-graph subset search up to 10 edges") {
    long long checked = 0;
    for (const Graph &g : all_connected_graphs(7)) {
        if (g.edge_count() > 10)
            continue;
        for (const PropertySpec &pi : {bipartite_property(), q_colorable_property(3)}) {
            REQUIRE(excess(g, pi).ex == brute::ex(g, pi));
            ++checked;
        }
    }
    const PropertySpec acyc = acyclic_oriented_property();
    for (const Graph &h : all_connected_graphs(5)) {
        if (h.edge_count() > 10)
            continue;
        for_each_variant(h, GraphClass::oriented(), [&](const Graph &g) {
            REQUIRE(excess(g, acyc).ex == brute::ex(g, acyc));
            ++checked;
            return true;
        });
    }
    CHECK(checked > 2000);
}

TEST_CASE("property names") {
    CHECK(property_by_name("qcol:4").lambda.value() == Rational(3, 4));
    CHECK(property_by_name("acyclic-oriented").graph_class == GraphClass::oriented());
    CHECK_THROWS_AS(property_by_name("qcol:2"), std::invalid_argument);
    CHECK_THROWS_AS(property_by_name("qcol:x"), std::invalid_argument);
    CHECK_THROWS_AS(property_by_name("planar"), std::invalid_argument);
}

TEST_CASE("block over the edge cap without a solver") {
    PropertySpec pi = bipartite_property();
    pi.max_subgraph = nullptr;
    CHECK_THROWS_AS(ms(complete_graph(7), pi), BlockTooLarge);  // 21 edges
    CHECK(ms(complete_graph(6), pi) == 9);
}
