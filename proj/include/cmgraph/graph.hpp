#ifndef CMGRAPH_GRAPH_HPP
#define CMGRAPH_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmgraph/vertex_set.hpp"

namespace cmg {

/// Opaque vertex name. Ordering is "natural": dot-separated components are
/// compared numerically when both are digit strings, so "2.1" < "10.1".
/// Constructed graphs use the pair form "i.j".
class VertexLabel {
 public:
  VertexLabel() = default;
  VertexLabel(std::string name);  // NOLINT: implicit by design of the literal-heavy tests
  VertexLabel(const char* name) : VertexLabel(std::string(name)) {}
  static VertexLabel pair(int i, int j);
  static VertexLabel number(int i);

  const std::string& str() const { return name_; }

  bool operator==(const VertexLabel& other) const { return name_ == other.name_; }
  std::strong_ordering operator<=>(const VertexLabel& other) const;

 private:
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const VertexLabel& label);

using LabelEdge = std::pair<VertexLabel, VertexLabel>;

/// Finite simple undirected graph. Vertices are stored in label order, so
/// vertex index order and canonical label order coincide. At most 64 vertices.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = VertexSet::kCapacity;

  SimpleGraph() = default;

  /// Throws GraphError on a loop edge, an unknown endpoint, a duplicate vertex
  /// label, or more than kMaxVertices vertices. Repeated edges are merged.
  static SimpleGraph build(std::vector<VertexLabel> vertices, const std::vector<LabelEdge>& edges);

  int order() const { return static_cast<int>(labels_.size()); }
  std::size_t edge_count() const;
  VertexSet all() const { return VertexSet::first_n(order()); }

  const std::vector<VertexLabel>& labels() const { return labels_; }
  const VertexLabel& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::optional<int> find(const VertexLabel& label) const;
  /// Throws GraphError for an unknown label.
  int index_of(const VertexLabel& label) const;
  VertexSet set_of(const std::vector<VertexLabel>& labels) const;
  std::vector<VertexLabel> labels_of(VertexSet set) const;

  VertexSet neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighbors(int v) const { return neighbors(v).with(v); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  int degree(int v) const { return neighbors(v).size(); }
  /// Index pairs (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool is_independent(VertexSet set) const;
  bool has_edges_within(VertexSet set) const { return !is_independent(set); }
  /// Connected components of the induced subgraph on `within`, ordered by smallest member.
  std::vector<VertexSet> components_within(VertexSet within) const;
  VertexSet component_of(int v, VertexSet within) const;
  SimpleGraph induced(VertexSet keep) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<VertexSet> adjacency_;
};

/// Open (or closed) neighborhood of v, in label order.
std::vector<VertexLabel> neighborhood(const SimpleGraph& g, const VertexLabel& v, bool closed);
/// Induced subgraph on V(g) minus `removed`. Throws GraphError for unknown labels.
SimpleGraph delete_vertices(const SimpleGraph& g, const std::vector<VertexLabel>& removed);
/// Maximal connected induced subgraphs, ordered by smallest contained label.
std::vector<SimpleGraph> components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

enum class Family { cycle, path, complete };

/// Canonical members labeled 1..k. For `path`, `size` counts EDGES (P_2 has 3
/// vertices); cycles need size >= 3, paths and complete graphs size >= 1.
SimpleGraph make_family(Family kind, int size);

/// Same graph with every label replaced by prefix + label.
SimpleGraph prefix_labels(const SimpleGraph& g, const std::string& prefix);

}  // namespace cmg

#endif
