#include "cmgraph/construction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cmgraph/errors.hpp"
#include "cmgraph/graph_io.hpp"

namespace cmg {

namespace {

std::string part_name(std::size_t i) { return "part " + std::to_string(i + 1); }

void validate_part(const Part& p, std::size_t i) {
  if (p.graph.order() < 2) {
    throw PreconditionError(part_name(i) + " has " + std::to_string(p.graph.order()) +
                            " vertices; at least 2 are required");
  }
  if (!is_connected(p.graph)) throw PreconditionError(part_name(i) + " is not connected");
  if (!p.graph.find(p.attach_at)) {
    throw PreconditionError(part_name(i) + ": attachment vertex '" + p.attach_at.str() + "' is not in the part");
  }
}

SimpleGraph attach_validated(const SimpleGraph& base, const std::vector<const Part*>& parts) {
  std::vector<VertexLabel> vertices;
  std::vector<LabelEdge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const SimpleGraph& pg = parts[i]->graph;
    const int root = pg.index_of(parts[i]->attach_at);
    const int pi = static_cast<int>(i) + 1;
    std::vector<VertexLabel> renamed(static_cast<std::size_t>(pg.order()));
    int next = 2;
    for (int v = 0; v < pg.order(); ++v) {
      renamed[static_cast<std::size_t>(v)] = VertexLabel::pair(pi, v == root ? 1 : next++);
    }
    vertices.insert(vertices.end(), renamed.begin(), renamed.end());
    for (const auto& [u, v] : pg.edges()) {
      edges.emplace_back(renamed[static_cast<std::size_t>(u)], renamed[static_cast<std::size_t>(v)]);
    }
  }
  for (const auto& [u, v] : base.edges()) edges.emplace_back(VertexLabel::pair(u + 1, 1), VertexLabel::pair(v + 1, 1));
  return SimpleGraph::build(std::move(vertices), edges);
}

}  // namespace

void AttachmentSpec::validate() const {
  if (parts.size() != static_cast<std::size_t>(base.order())) {
    throw PreconditionError("expected one part per base vertex: base has " + std::to_string(base.order()) +
                            " vertices, got " + std::to_string(parts.size()) + " parts");
  }
  std::map<VertexLabel, std::size_t> owner;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    validate_part(parts[i], i);
    for (const auto& l : parts[i].graph.labels()) {
      const auto [it, fresh] = owner.emplace(l, i);
      if (!fresh) {
        throw PreconditionError(part_name(i) + " reuses label '" + l.str() + "' of " + part_name(it->second));
      }
    }
  }
}

SimpleGraph attach(const AttachmentSpec& spec) {
  spec.validate();
  std::vector<const Part*> parts;
  for (const auto& p : spec.parts) parts.push_back(&p);
  return attach_validated(spec.base, parts);
}

SimpleGraph attach_uniform(const SimpleGraph& base, const SimpleGraph& part, const VertexLabel& attach_at) {
  const Part p{part, attach_at};
  validate_part(p, 0);
  const std::vector<const Part*> parts(static_cast<std::size_t>(base.order()), &p);
  return attach_validated(base, parts);
}

VertexSet attachment_vertices(const SimpleGraph& attached, int parts) {
  VertexSet s;
  for (int i = 1; i <= parts; ++i) s = s.with(attached.index_of(VertexLabel::pair(i, 1)));
  return s;
}

VertexSet part_vertices(const SimpleGraph& attached, int part) {
  const std::string prefix = std::to_string(part) + ".";
  VertexSet s;
  for (int v = 0; v < attached.order(); ++v) {
    if (attached.label(v).str().starts_with(prefix)) s = s.with(v);
  }
  return s;
}

namespace {

struct Section {
  std::size_t header_line = 0;
  std::string body;
  VertexLabel attach_at;
};

SimpleGraph parse_section(const Section& s) {
  try {
    return parse_edge_list_string(s.body);
  } catch (const ParseError& e) {
    if (e.line() == 0) throw ParseError(s.header_line, e.what());
    // Strip the inner "line N: " prefix and renumber against the whole file.
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw ParseError(s.header_line + e.line(), msg);
  }
}

void read_sections(std::istream& in, bool allow_base, Section& base, bool& have_base,
                   std::map<int, Section>& parts) {
  Section* current = nullptr;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (!tok.empty() && tok[0] == "base:") {
      if (!allow_base) throw ParseError(line_no, "unexpected base section");
      if (have_base) throw ParseError(line_no, "duplicate base section");
      have_base = true;
      base.header_line = line_no;
      current = &base;
      continue;
    }
    if (!tok.empty() && tok[0] == "part") {
      if (tok.size() != 4 || tok[2] != "attach" || tok[3].size() < 2 || tok[3].back() != ':') {
        throw ParseError(line_no, "expected 'part <i> attach <label>:'");
      }
      int index = 0;
      try {
        std::size_t used = 0;
        index = std::stoi(tok[1], &used);
        if (used != tok[1].size()) throw std::invalid_argument(tok[1]);
      } catch (const std::exception&) {
        throw ParseError(line_no, "part index '" + tok[1] + "' is not an integer");
      }
      if (index < 1) throw ParseError(line_no, "part index must be >= 1");
      auto [it, fresh] = parts.try_emplace(index);
      if (!fresh) throw ParseError(line_no, "duplicate part " + std::to_string(index));
      it->second.header_line = line_no;
      it->second.attach_at = VertexLabel(tok[3].substr(0, tok[3].size() - 1));
      current = &it->second;
      continue;
    }
    if (current == nullptr) {
      if (tok.empty() || tok[0].front() == '#') continue;
      throw ParseError(line_no, "content before the first section");
    }
    current->body += line;
    current->body += '\n';
  }
}

AttachmentSpec build_spec(SimpleGraph base, const std::map<int, Section>& sections) {
  AttachmentSpec spec;
  spec.base = std::move(base);
  int expected = 1;
  for (const auto& [index, section] : sections) {
    if (index != expected) {
      throw ParseError(section.header_line, "part " + std::to_string(expected) + " is missing");
    }
    ++expected;
    const std::string prefix = std::to_string(index) + ".";
    SimpleGraph g = prefix_labels(parse_section(section), prefix);
    spec.parts.push_back(Part{std::move(g), VertexLabel(prefix + section.attach_at.str())});
  }
  spec.validate();
  return spec;
}

}  // namespace

AttachmentSpec parse_attachment_spec(std::istream& in) {
  Section base;
  bool have_base = false;
  std::map<int, Section> parts;
  read_sections(in, true, base, have_base, parts);
  if (!have_base) throw ParseError(0, "missing 'base:' section");
  return build_spec(parse_section(base), parts);
}

AttachmentSpec parse_attachment_spec_string(const std::string& text) {
  std::istringstream in(text);
  return parse_attachment_spec(in);
}

AttachmentSpec parse_parts(std::istream& in, SimpleGraph base) {
  Section unused;
  bool have_base = false;
  std::map<int, Section> parts;
  read_sections(in, false, unused, have_base, parts);
  return build_spec(std::move(base), parts);
}

}  // namespace cmg
