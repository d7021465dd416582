#ifndef CMGRAPH_INDEPENDENCE_HPP
#define CMGRAPH_INDEPENDENCE_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cmgraph/complex.hpp"
#include "cmgraph/graph.hpp"
#include "cmgraph/limits.hpp"

namespace cmg {

/// All maximal independent sets of a graph, in canonical order.
struct IndependentSetFamily {
  std::vector<VertexSet> sets;

  bool contains(VertexSet s) const;
};

struct UnmixedVerdict {
  bool holds = true;
  int alpha = 0;
  /// Set when holds is false: a smallest and a largest maximal independent set.
  std::optional<std::pair<VertexSet, VertexSet>> witness;
};

/// Calls `visit` on every maximal independent set of the subgraph induced on
/// `within` (subsets of `within`, in no particular order) until it returns false.
/// Returns false iff stopped early. The empty subgraph yields the empty set.
bool for_each_maximal_independent_set(const SimpleGraph& g, VertexSet within,
                                      const std::function<bool(VertexSet)>& visit);

/// Unsorted, for internal hot paths.
std::vector<VertexSet> maximal_independent_sets_within(const SimpleGraph& g, VertexSet within);

IndependentSetFamily maximal_independent_sets(const SimpleGraph& g, const Limits& limits = {});
int independence_number(const SimpleGraph& g, const Limits& limits = {});
UnmixedVerdict is_unmixed(const SimpleGraph& g, const Limits& limits = {});
/// Whether C_m minus one vertex is unmixed. Throws PreconditionError for m < 3.
bool cycle_deletion_unmixed(int m);
/// Complex on V(g) whose facets are the maximal independent sets of g.
SimplicialComplex independence_complex(const SimpleGraph& g, const Limits& limits = {});

/// Throws CapExceeded when g has more vertices than limits.vertex_cap.
void check_vertex_cap(const SimpleGraph& g, const Limits& limits);

}  // namespace cmg

#endif
