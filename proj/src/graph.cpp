#include "cmgraph/graph.hpp"

#include <algorithm>
#include <cctype>

#include "cmgraph/errors.hpp"

namespace cmg {

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::strong_ordering compare_numeric(std::string_view a, std::string_view b) {
  const auto strip = [](std::string_view s) {
    const auto nz = s.find_first_not_of('0');
    return nz == std::string_view::npos ? std::string_view("0") : s.substr(nz);
  };
  const std::string_view sa = strip(a);
  const std::string_view sb = strip(b);
  if (sa.size() != sb.size()) return sa.size() <=> sb.size();
  return sa.compare(sb) <=> 0;
}

std::vector<std::string_view> split_dots(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = s.find('.', start);
    if (dot == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, dot - start));
    start = dot + 1;
  }
}

}  // namespace

VertexLabel::VertexLabel(std::string name) : name_(std::move(name)) {}

VertexLabel VertexLabel::pair(int i, int j) {
  return VertexLabel(std::to_string(i) + "." + std::to_string(j));
}

VertexLabel VertexLabel::number(int i) { return VertexLabel(std::to_string(i)); }

std::strong_ordering VertexLabel::operator<=>(const VertexLabel& other) const {
  const auto a = split_dots(name_);
  const auto b = split_dots(other.name_);
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
    const bool na = is_digits(a[k]);
    const bool nb = is_digits(b[k]);
    std::strong_ordering c = std::strong_ordering::equal;
    if (na && nb) {
      c = compare_numeric(a[k], b[k]);
    } else if (na != nb) {
      c = na ? std::strong_ordering::less : std::strong_ordering::greater;
    } else {
      c = a[k].compare(b[k]) <=> 0;
    }
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() <=> b.size();
  // "01" vs "1": numerically tied, keep the order total.
  return name_.compare(other.name_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const VertexLabel& label) { return os << label.str(); }

SimpleGraph SimpleGraph::build(std::vector<VertexLabel> vertices, const std::vector<LabelEdge>& edges) {
  if (vertices.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw GraphError("graph has " + std::to_string(vertices.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  std::sort(vertices.begin(), vertices.end());
  const auto dup = std::adjacent_find(vertices.begin(), vertices.end());
  if (dup != vertices.end()) throw GraphError("duplicate vertex label '" + dup->str() + "'");

  SimpleGraph g;
  g.labels_ = std::move(vertices);
  g.adjacency_.assign(g.labels_.size(), VertexSet{});
  for (const auto& [a, b] : edges) {
    if (a == b) throw GraphError("loop edge at '" + a.str() + "'");
    const auto ia = g.find(a);
    const auto ib = g.find(b);
    if (!ia) throw GraphError("edge endpoint '" + a.str() + "' is not a declared vertex");
    if (!ib) throw GraphError("edge endpoint '" + b.str() + "' is not a declared vertex");
    g.adjacency_[static_cast<std::size_t>(*ia)] |= VertexSet::single(*ib);
    g.adjacency_[static_cast<std::size_t>(*ib)] |= VertexSet::single(*ia);
  }
  return g;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet n : adjacency_) twice += static_cast<std::size_t>(n.size());
  return twice / 2;
}

std::optional<int> SimpleGraph::find(const VertexLabel& label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || !(*it == label)) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int SimpleGraph::index_of(const VertexLabel& label) const {
  const auto i = find(label);
  if (!i) throw GraphError("unknown vertex '" + label.str() + "'");
  return *i;
}

VertexSet SimpleGraph::set_of(const std::vector<VertexLabel>& labels) const {
  VertexSet s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<VertexLabel> SimpleGraph::labels_of(VertexSet set) const {
  std::vector<VertexLabel> out;
  out.reserve(static_cast<std::size_t>(set.size()));
  for (int v : set) out.push_back(label(v));
  return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u) - VertexSet::first_n(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

bool SimpleGraph::is_independent(VertexSet set) const {
  for (int v : set) {
    if (neighbors(v).intersects(set)) return false;
  }
  return true;
}

VertexSet SimpleGraph::component_of(int v, VertexSet within) const {
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier) next |= neighbors(u);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> SimpleGraph::components_within(VertexSet within) const {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    const VertexSet c = component_of(rest.front(), within);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

SimpleGraph SimpleGraph::induced(VertexSet keep) const {
  SimpleGraph g;
  std::vector<int> new_index(labels_.size(), -1);
  for (int v : keep) {
    new_index[static_cast<std::size_t>(v)] = static_cast<int>(g.labels_.size());
    g.labels_.push_back(label(v));
  }
  g.adjacency_.assign(g.labels_.size(), VertexSet{});
  for (int v : keep) {
    VertexSet n;
    for (int u : neighbors(v) & keep) n = n.with(new_index[static_cast<std::size_t>(u)]);
    g.adjacency_[static_cast<std::size_t>(new_index[static_cast<std::size_t>(v)])] = n;
  }
  return g;
}

std::vector<VertexLabel> neighborhood(const SimpleGraph& g, const VertexLabel& v, bool closed) {
  const int i = g.index_of(v);
  return g.labels_of(closed ? g.closed_neighbors(i) : g.neighbors(i));
}

SimpleGraph delete_vertices(const SimpleGraph& g, const std::vector<VertexLabel>& removed) {
  return g.induced(g.all() - g.set_of(removed));
}

std::vector<SimpleGraph> components(const SimpleGraph& g) {
  std::vector<SimpleGraph> out;
  for (VertexSet c : g.components_within(g.all())) out.push_back(g.induced(c));
  return out;
}

bool is_connected(const SimpleGraph& g) { return g.components_within(g.all()).size() <= 1; }

SimpleGraph make_family(Family kind, int size) {
  std::vector<VertexLabel> vertices;
  std::vector<LabelEdge> edges;
  int n = 0;
  switch (kind) {
    case Family::cycle:
      if (size < 3) throw PreconditionError("cycle needs at least 3 vertices, got " + std::to_string(size));
      n = size;
      for (int i = 1; i <= n; ++i) edges.emplace_back(VertexLabel::number(i), VertexLabel::number(i % n + 1));
      break;
    case Family::path:
      if (size < 1) throw PreconditionError("path needs at least 1 edge, got " + std::to_string(size));
      n = size + 1;
      for (int i = 1; i < n; ++i) edges.emplace_back(VertexLabel::number(i), VertexLabel::number(i + 1));
      break;
    case Family::complete:
      if (size < 1) throw PreconditionError("complete graph needs at least 1 vertex, got " + std::to_string(size));
      n = size;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(VertexLabel::number(i), VertexLabel::number(j));
      }
      break;
  }
  for (int i = 1; i <= n; ++i) vertices.push_back(VertexLabel::number(i));
  return SimpleGraph::build(std::move(vertices), edges);
}

SimpleGraph prefix_labels(const SimpleGraph& g, const std::string& prefix) {
  std::vector<VertexLabel> vertices;
  for (const auto& l : g.labels()) vertices.emplace_back(prefix + l.str());
  std::vector<LabelEdge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(vertices[static_cast<std::size_t>(u)], vertices[static_cast<std::size_t>(v)]);
  return SimpleGraph::build(std::move(vertices), edges);
}

}  // namespace cmg
