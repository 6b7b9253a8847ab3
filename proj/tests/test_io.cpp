#include <doctest.h>

#include "apt/graph_io.hpp"

using namespace apt;

TEST_CASE("round trip through the text format") {
    Graph g(4, GraphClass::oriented());
    g.add_arc(2, 0);
    g.add_arc(1, 3);
    g.add_arc(0, 1);
    std::string text = write_graph(g);
    CHECK(text == "apt-graph v1 oriented 4\n0 1 >\n0 2 <\n1 3 >\n");
    CHECK(parse_graph(text) == g);

    Graph l(3, GraphClass::labelled(2));
    l.add_edge(0, 1, 1);
    l.add_edge(1, 2, 0);
    CHECK(parse_graph(write_graph(l)) == l);

    Graph s = parse_graph("# a comment\napt-graph v1 simple 3\n\n0 1  # trailing\n2 1\n");
    CHECK(s.edge_count() == 2);
    CHECK(s.adjacent(1, 2));
}

TEST_CASE("errors report their line") {
    auto line_of = [](std::string_view text) {
        try {
            parse_graph(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("apt-graph v2 simple 2\n") == 1);
    CHECK(line_of("apt-graph v1 simple 2\n0 1\n0 5\n") == 3);
    CHECK(line_of("apt-graph v1 simple 2\n0 0\n") == 2);
    CHECK(line_of("apt-graph v1 simple 2\n0 1\n1 0\n") == 3);
    CHECK(line_of("apt-graph v1 oriented 2\n0 1\n") == 2);
    CHECK(line_of("apt-graph v1 labelled 2 2\n0 1 7\n") == 2);
    CHECK(line_of("") == 1);
    try {
        parse_graph("apt-graph v1 simple 2\n0 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).rfind("line 2:", 0) == 0);
    }
}

TEST_CASE("parameters") {
    CHECK(parse_parameter("3") == 3);
    CHECK(parse_parameter("5/4") == Rational(5, 4));
    CHECK(parse_parameter("2/4") == Rational(1, 2));
    CHECK_THROWS(parse_parameter("1/3"));
    CHECK_THROWS(parse_parameter("0"));
    CHECK_THROWS(parse_parameter("-1"));
    CHECK_THROWS(parse_parameter("abc"));
}
