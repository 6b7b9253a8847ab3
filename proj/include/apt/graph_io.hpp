#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "apt/graph.hpp"
#include "apt/rational.hpp"

namespace apt {

/// Parse failure carrying the 1-based line it refers to.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Reads the text format
///
///     apt-graph v1 <simple|oriented|labelled> <n> [alphabet]
///     u v [>|<] [label]
///
/// `>` orients u -> v and `<` orients v -> u; oriented files must give one of them on every
/// edge, labelled files a label. Blank lines and text after `#` are ignored.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string &path);

/// Canonical form: header, then one line per edge with u < v in increasing order, no comments.
std::string write_graph(const Graph &g);

/// Parses k as an integer or p/q, requiring k > 0 and q dividing 4.
Rational parse_parameter(std::string_view text);

} // namespace apt
