#include "apt/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

namespace apt {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

int to_int(std::string_view tok, int line, const char *what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
    return value;
}

} // namespace

Graph parse_graph(std::string_view text) {
    std::optional<Graph> g;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tok = tokens(line);
        if (tok.empty())
            continue;

        if (!g) {
            if (tok.size() < 4 || tok[0] != "apt-graph" || tok[1] != "v1")
                throw ParseError(line_no, "expected header 'apt-graph v1 <class> <n> [alphabet]'");
            GraphClass cls;
            if (tok[2] == "simple")
                cls = GraphClass::simple();
            else if (tok[2] == "oriented")
                cls = GraphClass::oriented();
            else if (tok[2] == "labelled")
                cls = GraphClass::labelled(0);
            else
                throw ParseError(line_no, "unknown graph class '" + std::string(tok[2]) + "'");
            int n = to_int(tok[3], line_no, "vertex count");
            if (n < 0)
                throw ParseError(line_no, "vertex count must be non-negative");
            std::size_t expected = cls.kind == ClassKind::Labelled ? 5 : 4;
            if (tok.size() != expected)
                throw ParseError(line_no, cls.kind == ClassKind::Labelled ? "labelled header needs an alphabet size"
                                                                           : "unexpected tokens after vertex count");
            if (cls.kind == ClassKind::Labelled) {
                cls.alphabet_size = to_int(tok[4], line_no, "alphabet size");
                if (cls.alphabet_size <= 0)
                    throw ParseError(line_no, "alphabet size must be positive");
            }
            g.emplace(n, cls);
            continue;
        }

        const ClassKind kind = g->graph_class().kind;
        std::size_t expected = kind == ClassKind::Simple ? 2 : 3;
        if (tok.size() != expected)
            throw ParseError(line_no, "expected " + std::to_string(expected) + " fields on an edge line, got " +
                                          std::to_string(tok.size()));
        int u = to_int(tok[0], line_no, "vertex id");
        int v = to_int(tok[1], line_no, "vertex id");
        try {
            if (kind == ClassKind::Oriented) {
                if (tok[2] == ">")
                    g->add_edge(u, v);
                else if (tok[2] == "<")
                    g->add_edge(v, u);
                else
                    throw ParseError(line_no, "orientation must be '>' or '<'");
            } else if (kind == ClassKind::Labelled) {
                g->add_edge(u, v, to_int(tok[2], line_no, "label"));
            } else {
                g->add_edge(u, v);
            }
        } catch (const GraphError &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!g)
        throw ParseError(line_no, "missing header");
    return *g;
}

Graph read_graph_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string write_graph(const Graph &g) {
    const GraphClass &cls = g.graph_class();
    std::ostringstream out;
    out << "apt-graph v1 ";
    switch (cls.kind) {
    case ClassKind::Simple:
        out << "simple " << g.vertex_count();
        break;
    case ClassKind::Oriented:
        out << "oriented " << g.vertex_count();
        break;
    case ClassKind::Labelled:
        out << "labelled " << g.vertex_count() << ' ' << cls.alphabet_size;
        break;
    }
    out << '\n';
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (const Edge &e : edges) {
        out << e.u << ' ' << e.v;
        if (cls.kind == ClassKind::Oriented)
            out << (e.dir == Direction::Forward ? " >" : " <");
        else if (cls.kind == ClassKind::Labelled)
            out << ' ' << e.label;
        out << '\n';
    }
    return out.str();
}

Rational parse_parameter(std::string_view text) {
    Rational k = parse_rational(text);
    if (k <= 0)
        throw std::invalid_argument("k must be positive, got " + to_string(k));
    if (4 % k.denominator() != 0)
        throw std::invalid_argument("k must have a denominator dividing 4, got " + to_string(k));
    return k;
}

} // namespace apt
