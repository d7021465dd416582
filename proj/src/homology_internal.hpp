#ifndef CMGRAPH_SRC_HOMOLOGY_INTERNAL_HPP
#define CMGRAPH_SRC_HOMOLOGY_INTERNAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cmgraph/complex.hpp"

namespace cmg::detail {

using FaceLevels = std::vector<std::vector<VertexSet>>;

/// Downward closure of a facet antichain, grouped by face size; each level sorted by bits.
/// Throws CapExceeded when more than `cap` faces are produced.
FaceLevels close_downward(const std::vector<VertexSet>& facets, std::size_t cap);

/// Rank of the boundary map from faces of size k to faces of size k-1 (k >= 1).
long boundary_rank(const FaceLevels& levels, std::size_t k, Field field);

/// Reduced Betti numbers for dimensions -1..top.
std::vector<long> reduced_betti(const FaceLevels& levels, Field field);

/// Smallest dimension i in [from, to] with nonzero reduced homology, if any.
std::optional<int> first_nonzero_betti(const FaceLevels& levels, Field field, int from, int to);

/// Number of connected components of the vertices covered by `facets`.
int component_count(const std::vector<VertexSet>& facets);

}  // namespace cmg::detail

#endif
