#include "cmgraph/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "cmgraph/errors.hpp"

namespace cmg {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

}  // namespace

SimpleGraph parse_edge_list(std::istream& in) {
  std::set<VertexLabel> vertices;
  std::vector<LabelEdge> edges;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty() || tok.front().front() == '#') continue;
    if (tok.size() != 2) {
      throw ParseError(line_no, "expected '<label> <label>' or 'vertex <label>', got " +
                                    std::to_string(tok.size()) + " tokens");
    }
    if (tok[0] == "vertex") {
      vertices.insert(VertexLabel(tok[1]));
      continue;
    }
    if (tok[0] == tok[1]) throw ParseError(line_no, "loop edge at '" + tok[0] + "'");
    vertices.insert(VertexLabel(tok[0]));
    vertices.insert(VertexLabel(tok[1]));
    edges.emplace_back(VertexLabel(tok[0]), VertexLabel(tok[1]));
  }
  try {
    return SimpleGraph::build({vertices.begin(), vertices.end()}, edges);
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
}

SimpleGraph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

SimpleGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out << "vertex " << g.label(v) << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::string to_edge_list_string(const SimpleGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace cmg
