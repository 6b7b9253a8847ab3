#include <doctest.h>

#include "apt/enumerate.hpp"
#include "apt/graph.hpp"
#include "apt/rational.hpp"

using namespace apt;

TEST_CASE("edges are stored with u < v and keep their orientation") {
    Graph g(3, GraphClass::oriented());
    g.add_arc(2, 0);
    CHECK(g.edge(0).u == 0);
    CHECK(g.edge(0).v == 2);
    CHECK(g.edge(0).tail() == 2);
    CHECK(g.edge(0).head() == 0);
    CHECK_THROWS_AS(g.add_edge(0, 2), GraphError);
    CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
}

TEST_CASE("decorations must match the class") {
    Graph simple(2);
    CHECK_THROWS_AS(simple.add_edge(0, 1, 1), GraphError);
    Graph lab(2, GraphClass::labelled(2));
    CHECK_THROWS_AS(lab.add_edge(0, 1, 2), GraphError);
    lab.add_edge(0, 1, 1);
    CHECK(lab.edge(0).label == 1);
}

TEST_CASE("delete all vertices gives the empty graph") {
    Graph g = complete_graph(4);
    std::vector<Vertex> all{0, 1, 2, 3};
    Graph e = delete_vertices(g, all);
    CHECK(e.vertex_count() == 0);
    CHECK(e.edge_count() == 0);
}

TEST_CASE("identifying the ends of P5 gives C4") {
    Graph p = path_graph(5);
    Graph c = identify_vertices(p, 0, 4);
    CHECK(c.vertex_count() == 4);
    CHECK(c.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v)
        CHECK(c.degree(v) == 2);
    CHECK(c.is_connected());
    CHECK_THROWS_AS(identify_vertices(p, 0, 1), GraphError);  // adjacent
    CHECK_THROWS_AS(identify_vertices(p, 0, 2), GraphError);  // common neighbour
}

TEST_CASE("induced subgraph inherits orientations") {
    Graph t = complete_graph(4, GraphClass::oriented());
    t.set_direction(*t.edge_index(1, 3), Direction::Backward);
    std::vector<Vertex> keep{1, 2, 3};
    Graph k3 = induced_subgraph(t, keep);
    CHECK(k3.edge_count() == 3);
    // 1 -> 3 was reversed, so in the subgraph 2 -> 0.
    auto e = k3.edge(*k3.edge_index(0, 2));
    CHECK(e.tail() == 2);
}

TEST_CASE("components and connectivity") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(g.component_count() == 3);
    CHECK_FALSE(g.is_connected());
    CHECK(path_graph(5).is_connected());
}

TEST_CASE("oriented cycle builder is a directed cycle") {
    Graph c = cycle_graph(3, GraphClass::oriented());
    std::vector<int> out(3, 0);
    for (const Edge &e : c.edges())
        ++out[e.tail()];
    CHECK(out == std::vector<int>{1, 1, 1});
}

TEST_CASE("encode is canonical over insertion order") {
    Graph a(3), b(3);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    b.add_edge(2, 1);
    b.add_edge(1, 0);
    CHECK(a == b);
}

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(floor(Rational(-1, 2)) == -1);
    CHECK(ceil(Rational(1, 2)) == 1);
    CHECK(ceil(Rational(2)) == 2);
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK_THROWS(Lambda(Rational(1)));
    CHECK_THROWS(Lambda(Rational(0)));
    CHECK(Lambda(Rational(2, 3)).half_complement() == Rational(1, 6));
}

TEST_CASE("connected graph counts up to isomorphism") {
    // Known counts of connected unlabelled graphs.
    const int expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n)
        CHECK(connected_graphs_of_order(n).size() == static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("labelled enumeration agrees with dedup on small orders") {
    // Connected labelled graphs on 4 vertices: 38.
    int count = 0;
    for_each_graph(4, GraphClass::simple(), [&](const Graph &g) {
        count += g.is_connected();
        return true;
    });
    CHECK(count == 38);
}

TEST_CASE("variant enumeration sizes") {
    int oriented = 0, labelled = 0;
    for_each_variant(complete_graph(3), GraphClass::oriented(), [&](const Graph &) { return ++oriented, true; });
    for_each_variant(complete_graph(3), GraphClass::labelled(3), [&](const Graph &) { return ++labelled, true; });
    CHECK(oriented == 8);
    CHECK(labelled == 27);
}
