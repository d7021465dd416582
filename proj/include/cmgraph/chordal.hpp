#ifndef CMGRAPH_CHORDAL_HPP
#define CMGRAPH_CHORDAL_HPP

#include <string>
#include <vector>

#include "cmgraph/graph.hpp"
#include "cmgraph/limits.hpp"

namespace cmg {

struct ChordalVerdict {
  bool holds = false;
  /// Perfect elimination ordering (vertex indices) when chordal.
  std::vector<int> elimination_order;
  /// Otherwise a chordless cycle of length >= 4, in cyclic order.
  std::vector<int> chordless_cycle;
};

/// Maximum-cardinality search, verified as a perfect elimination ordering.
ChordalVerdict is_chordal(const SimpleGraph& g);
bool is_perfect_elimination_order(const SimpleGraph& g, const std::vector<int>& order);
bool is_chordless_cycle(const SimpleGraph& g, const std::vector<int>& cycle);

bool is_simplicial(const SimpleGraph& g, int v);
VertexSet simplicial_vertices(const SimpleGraph& g);
/// Union of N(v) over simplicial vertices v. Throws PreconditionError unless g
/// is chordal with at least two vertices.
VertexSet valid_attachment_points(const SimpleGraph& g);

struct ChordalDeletionReport {
  std::size_t pairs_checked = 0;
  /// "x=<label> y=<label>" for each pair whose deletion is not unmixed.
  std::vector<std::string> violations;
};

/// For every simplicial x and y in N(x), checks that g - y is unmixed.
/// Requires g chordal, unmixed, with a simplicial vertex of positive degree.
ChordalDeletionReport check_chordal_deletion_unmixed(const SimpleGraph& g, const Limits& limits = {});

}  // namespace cmg

#endif
