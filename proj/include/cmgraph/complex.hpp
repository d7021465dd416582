#ifndef CMGRAPH_COMPLEX_HPP
#define CMGRAPH_COMPLEX_HPP

#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cmgraph/graph.hpp"
#include "cmgraph/limits.hpp"
#include "cmgraph/vertex_set.hpp"

namespace cmg {

using Universe = std::shared_ptr<const std::vector<VertexLabel>>;

/// Finite simplicial complex given by its facets. Faces are VertexSets over a
/// shared, label-sorted universe; `ground` is the declared vertex set, which may
/// contain vertices lying in no face.
///
/// The void complex (no faces) and the irrelevant complex {∅} are distinct:
/// the former has no facets, the latter the single facet ∅.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal sets. Throws GraphError if a facet leaves `ground`.
  static SimplicialComplex from_facets(Universe universe, VertexSet ground, std::vector<VertexSet> facets);
  /// Universe = the given ground labels plus every label used in a facet.
  static SimplicialComplex from_label_facets(const std::vector<std::vector<VertexLabel>>& facets,
                                             const std::vector<VertexLabel>& ground = {});
  static SimplicialComplex void_complex(Universe universe, VertexSet ground);
  static SimplicialComplex irrelevant(Universe universe, VertexSet ground);
  /// Trusted constructor: `facets` must already be a sorted antichain inside ground.
  static SimplicialComplex from_antichain(Universe universe, VertexSet ground, std::vector<VertexSet> facets);

  const Universe& universe() const { return universe_; }
  VertexSet ground() const { return ground_; }
  /// Sorted in canonical (label-lexicographic) order.
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  /// Union of all facets.
  VertexSet vertices() const;

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
  bool is_simplex() const { return facets_.size() == 1; }
  /// Largest facet size minus one; -1 for {∅}. Throws PreconditionError on the void complex.
  int dimension() const;
  bool contains_face(VertexSet face) const;

  /// faces_by_size()[k] lists the faces with k vertices, sorted by bits.
  /// Includes ∅ unless void. Throws CapExceeded past limits.face_cap faces.
  std::vector<std::vector<VertexSet>> faces_by_size(const Limits& limits = {}) const;
  std::size_t face_count(const Limits& limits = {}) const;

  std::vector<VertexLabel> labels_of(VertexSet face) const;
  VertexSet set_of(const std::vector<VertexLabel>& labels) const;

  /// Same facets as label sets (ground and universe are ignored).
  bool same_faces(const SimplicialComplex& other) const;

 private:
  Universe universe_ = std::make_shared<const std::vector<VertexLabel>>();
  VertexSet ground_;
  std::vector<VertexSet> facets_;
};

enum class Field { GF2, Q };
std::string to_string(Field f);

/// Ranks of reduced homology, dimensions -1 .. dim.
struct HomologyProfile {
  Field field = Field::GF2;
  std::vector<long> ranks;  // ranks[0] is dimension -1

  long rank(int dim) const;
  int top_dimension() const { return static_cast<int>(ranks.size()) - 2; }
  /// Σ (-1)^i rank_i
  long euler_characteristic() const;
};

/// Reduced Euler characteristic from face counts, Σ_{F} (-1)^{dim F} including ∅.
long reduced_euler_characteristic(const SimplicialComplex& c, const Limits& limits = {});

SimplicialComplex link(const SimplicialComplex& c, VertexSet face);
SimplicialComplex deletion(const SimplicialComplex& c, VertexSet removed);
bool is_pure(const SimplicialComplex& c);
/// Subcomplex generated by the faces of dimension `dim`.
SimplicialComplex pure_skeleton(const SimplicialComplex& c, int dim);

HomologyProfile reduced_homology(const SimplicialComplex& c, Field field, const Limits& limits = {});

struct CmVerdict {
  bool holds = true;
  Field field = Field::GF2;
  /// On failure: a face whose link has nonzero reduced homology in a dimension below its own.
  VertexSet witness_face;
  int witness_dim = 0;
};

/// Reisner's criterion: every link (∅ included) has vanishing reduced homology below its dimension.
CmVerdict is_cohen_macaulay(const SimplicialComplex& c, Field field, const Limits& limits = {});

struct ScmVerdict {
  bool holds = true;
  Field field = Field::GF2;
  /// On failure: the dimension whose pure skeleton is not CM, and its Reisner witness.
  int skeleton_dim = -1;
  CmVerdict skeleton_witness;
};

/// Every pure i-skeleton is Cohen-Macaulay.
ScmVerdict is_sequentially_cohen_macaulay(const SimplicialComplex& c, Field field, const Limits& limits = {});

struct ShellVerdict {
  bool holds = false;
  /// A shelling order of the facets when holds.
  std::vector<VertexSet> order;
};

/// Nonpure shellability by exhaustive search. Throws CapExceeded when the complex
/// has more than facet_cap facets; that means undecided, not false.
ShellVerdict is_shellable(const SimplicialComplex& c, std::size_t facet_cap = Limits{}.facet_cap);
/// Checks that `order` is a shelling of c.
bool is_shelling_order(const SimplicialComplex& c, const std::vector<VertexSet>& order);

struct VdComplexNode {
  int vertex = -1;  // -1: simplex leaf
  std::shared_ptr<const VdComplexNode> link;
  std::shared_ptr<const VdComplexNode> deletion;
};

struct VdComplexVerdict {
  bool holds = false;
  std::shared_ptr<const VdComplexNode> tree;
};

/// Vertex decomposability with the stronger shedding condition (recursive
/// decomposability of link and deletion plus the no-shared-facet condition).
VdComplexVerdict is_vd_complex(const SimplicialComplex& c, const Limits& limits = {});

// Facet-list text format: one facet per line, whitespace-separated vertex labels;
// '#' comments; the sentinel lines "!void" and "!irrelevant" denote the
// degenerate complexes.
SimplicialComplex parse_facet_list(std::istream& in);
SimplicialComplex parse_facet_list_string(const std::string& text);
void write_facet_list(std::ostream& out, const SimplicialComplex& c);

}  // namespace cmg

#endif
