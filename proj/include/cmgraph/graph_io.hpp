#ifndef CMGRAPH_GRAPH_IO_HPP
#define CMGRAPH_GRAPH_IO_HPP

#include <istream>
#include <ostream>
#include <string>

#include "cmgraph/graph.hpp"

namespace cmg {

// Edge-list text format:
//   # comment
//   vertex <label>        declares a (possibly isolated) vertex
//   <label> <label>       an edge; endpoints are declared implicitly
// Labels are nonempty and contain no whitespace.

/// Throws ParseError naming the offending line.
SimpleGraph parse_edge_list(std::istream& in);
SimpleGraph parse_edge_list_string(const std::string& text);
SimpleGraph read_edge_list_file(const std::string& path);

/// Writes `vertex` lines for isolated vertices, then one edge per line, in label order.
void write_edge_list(std::ostream& out, const SimpleGraph& g);
std::string to_edge_list_string(const SimpleGraph& g);

}  // namespace cmg

#endif
