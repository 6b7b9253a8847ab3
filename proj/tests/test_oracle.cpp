#include <doctest.h>

#include "apt/enumerate.hpp"
#include "apt/oracle.hpp"
#include "brute.hpp"

using namespace apt;

TEST_CASE("solve_apt on small instances") {
    const PropertySpec acyc = acyclic_oriented_property();
    Graph cyc(3, GraphClass::oriented());
    cyc.add_arc(0, 1);
    cyc.add_arc(1, 2);
    cyc.add_arc(2, 0);
    CHECK_FALSE(solve_apt(Instance{cyc, Rational(1, 4), acyc}));

    Graph k4 = complete_graph(4, GraphClass::oriented());  // transitive tournament
    CHECK(solve_apt(Instance{k4, Rational(1, 4), acyc}));

    // A tree is bipartite, so its excess is m - pt = m/2 - (n-1)/4.
    const PropertySpec bip = bipartite_property();
    Graph p = path_graph(6);
    CHECK(brute_excess(p, bip) == Rational(5, 4));
    CHECK(brute_excess(p, bip) == brute::ex(p, bip));
}

TEST_CASE("generators are deterministic and connected") {
    GeneratorConfig cfg;
    cfg.seed = 42;
    cfg.family = RandomGnp{9, 0.3};
    auto a = generate(cfg);
    auto b = generate(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].is_connected());
    }

    GeneratorConfig all;
    all.family = AllConnected{4, true};
    CHECK(generate(all).size() == 6);
    all.family = AllConnected{4, false};
    CHECK(generate(all).size() == 38);  // labelled connected graphs on 4 vertices

    // Reproducible planted instance with a modulator of size at most one.
    GeneratorConfig planted;
    planted.seed = 7;
    planted.family = ForestOfCliquesPlusS{{3, 3, 2}, 1, 0.5};
    Graph p1 = generate(planted).front();
    CHECK(p1 == generate(planted).front());
    CHECK(p1.vertex_count() == 3 + 3 + 2 - 2 + 1);
    CHECK(brute::min_modulator_size(p1) <= 1);

    GeneratorConfig gnp;
    gnp.seed = 1;
    gnp.family = RandomGnp{10, 0.3};
    CHECK(generate(gnp).front().encode() == generate(gnp).front().encode());

    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Instance x = corpus_instance(acyclic_oriented_property(), seed, 1);
        Instance y = corpus_instance(acyclic_oriented_property(), seed, 1);
        REQUIRE(x.g == y.g);
        REQUIRE(x.g.is_connected());
        REQUIRE(x.g.graph_class() == GraphClass::oriented());
    }
}

TEST_CASE("planted modulators are modulators") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        ForestOfCliquesPlusS fam{random_clique_sizes(rng.between(2, 5), 1, 4, rng), rng.between(0, 2), 0.4};
        PlantedInstance inst = forest_of_cliques_plus_s(fam, GraphClass::simple(), {}, rng);
        REQUIRE(inst.g.is_connected());
        REQUIRE(brute::forest_of_cliques(delete_vertices(inst.g, inst.planted_s)));
    }
}

TEST_CASE("kernelizer agrees with brute force on a small corpus") {
    for (const PropertySpec &pi : {q_colorable_property(3), acyclic_oriented_property()}) {
        int yes = 0, kernels = 0;
        for (std::uint64_t seed = 1; seed <= 150; ++seed)
            for (int k = 1; k <= 2; ++k) {
                EquivalenceReport r = equivalence_check(corpus_instance(pi, seed, k));
                yes += r.outcome == "yes";
                kernels += r.outcome == "kernel";
            }
        CHECK_MESSAGE(kernels > 0, pi.name);
        CHECK(yes + kernels > 0);
    }
}

TEST_CASE("contract violations are reported") {
    // Wrong constants make the dangling threshold k instead of 6k, so K1,3 is called YES.
    const PropertySpec pi = q_colorable_property(3);
    PropertyConstants wrong = property_constants(pi);
    wrong.inf_ak = 1;  // dangling threshold becomes k
    Graph s = Graph(4);
    for (int i = 1; i < 4; ++i)
        s.add_edge(0, i);
    CHECK_THROWS_AS(equivalence_check(Instance{s, 1, pi}, KernelOptions{wrong}), ContractViolation);
}

TEST_CASE("rule validity on seeded patterns") {
    RuleValidityReport r = rule_validity_suite(3, 40, 10);
    CHECK(r.counterexamples.empty());
    CHECK(r.rule1_applications > 0);
    CHECK(r.rule2_identified > 0);
    CHECK(r.rule2_decremented > 0);
}

TEST_CASE("lemma suite on a reduced configuration") {
    LemmaSuiteConfig cfg;
    cfg.cutvertex_instances = 40;
    cfg.cutvertex_n_max = 8;
    cfg.half_n_max = 6;
    cfg.half_variant_n_max = 4;
    cfg.forest_instances = 60;
    for (const PropertySpec &pi : {q_colorable_property(3), acyclic_oriented_property(), bipartite_property()}) {
        long long cases = 0;  // lemmas that do not apply to pi report zero cases
        for (const LemmaResult &r : lemma_suite(pi, cfg)) {
            CHECK_MESSAGE(r.passed(), pi.name << ": " << r.name);
            cases += r.cases;
        }
        CHECK(cases > 0);
    }
}

TEST_CASE("shrink keeps failures") {
    Graph g = cycle_graph(7);
    g.add_edge(0, 3);
    auto cyclic_block = [](const Graph &h) { return !brute::forest_of_cliques(h); };
    Graph small = shrink(g, cyclic_block);
    CHECK(cyclic_block(small));
    CHECK(small.vertex_count() < g.vertex_count());
    // One-minimal: no single connected deletion still fails.
    for (Vertex v = 0; v < small.vertex_count(); ++v) {
        Vertex gone[] = {v};
        Graph h = delete_vertices(small, gone);
        if (h.is_connected())
            CHECK_FALSE(cyclic_block(h));
    }
}
