#pragma once

#include <string>
#include <string_view>

#include "hitwalk/graph.hpp"

namespace hitwalk {

// Plain-text graph format: a header line "n m" followed by m lines "u v"
// with u < v, 0-indexed ASCII decimal, newline-terminated. serialize_graph
// emits edges in lexicographic order, so parse(serialize(g)) == g.

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace hitwalk
