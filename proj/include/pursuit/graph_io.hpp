#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pursuit/graph.hpp"

namespace pursuit {

// graph6: N(n) header, then the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, offset 63.
// A leading ">>graph6<<" is accepted and skipped; trailing whitespace too.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Calls `sink` for every non-empty line of `in`. Malformed lines are counted
// and skipped; returns the number skipped.
std::size_t for_each_graph6(std::istream& in, const std::function<void(const Graph&, std::size_t line)>& sink);

// "n m" header followed by m lines "u v", 0-based.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Reads a graph file, picking the format from the extension (.g6 vs other)
// or, if unclear, from the contents.
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace pursuit
