#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xturan/hypergraph.hpp"

namespace xturan::io {

// graph6, one graph per line; the optional ">>graph6<<" header is accepted.
std::string to_graph6(const Hypergraph& g);
Hypergraph from_graph6(std::string_view line);
std::vector<Hypergraph> read_graph6_lines(std::string_view text);

// "r n m" header, then m lines of r vertex indices. '#' starts a comment.
std::string to_hypergraph_text(const Hypergraph& h);
Hypergraph parse_hypergraph_text(std::string_view text);

// "B m n e" header, then e lines "i j".
std::string to_bipartite_text(const BipartiteGraph& g);
BipartiteGraph parse_bipartite_text(std::string_view text);

using AnyGraph = std::variant<Hypergraph, BipartiteGraph>;

// Chooses the format from the content: a "B" header is bipartite, a three
// integer header is the hypergraph format, anything else is graph6.
AnyGraph parse_any(std::string_view text);
AnyGraph read_file(const std::string& path);
std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace xturan::io
