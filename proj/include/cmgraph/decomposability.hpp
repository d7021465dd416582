#ifndef CMGRAPH_DECOMPOSABILITY_HPP
#define CMGRAPH_DECOMPOSABILITY_HPP

#include <memory>
#include <string>
#include <vector>

#include "cmgraph/construction.hpp"
#include "cmgraph/graph.hpp"
#include "cmgraph/limits.hpp"

namespace cmg {

/// Node of a vertex-decomposition certificate. Vertex sets index the root graph.
struct VdNode {
  enum class Kind {
    leaf,   // edgeless induced subgraph
    shed,   // `vertex` is a shedding vertex; children are G - x and G - N[x]
    split,  // disconnected; one child per component that has edges
  };
  Kind kind = Kind::leaf;
  VertexSet vertices;
  int vertex = -1;
  std::vector<std::shared_ptr<const VdNode>> children;
};

struct VdCertificate {
  bool outcome = false;
  /// Proof tree on success (subtrees are shared between identical subsets).
  std::shared_ptr<const VdNode> tree;
  /// On failure: the smallest connected induced subgraph found not to be decomposable.
  VertexSet failing;
};

/// Woodroofe's shedding condition: every independent set S of g - N[x] misses
/// the neighborhood of some y in N(x). Checked on maximal S only.
bool satisfies_exchange(const SimpleGraph& g, const VertexLabel& x);
/// The stronger shedding notion: exchange plus decomposability of g - x and g - N[x].
bool is_shedding_vertex(const SimpleGraph& g, const VertexLabel& x, const Limits& limits = {});
VdCertificate is_vertex_decomposable(const SimpleGraph& g, const Limits& limits = {});

/// Re-checks a success certificate node by node without searching.
bool replay_certificate(const SimpleGraph& g, const VdCertificate& cert);
/// Indented text tree; shared subtrees after their first appearance print as "= #id".
std::string format_certificate(const SimpleGraph& g, const VdCertificate& cert);

/// Index-level variants on the subgraph induced by `within`.
bool satisfies_exchange_within(const SimpleGraph& g, VertexSet within, int x);

struct AttachmentVdReport {
  bool parts_vd = false;             // every part decomposable
  bool attachments_shedding = false; // every attachment vertex shedding in its part
  bool attached_vd = false;          // the attached graph decomposable
  std::vector<std::string> violations;
};

/// Evaluates both directions of the attachment theorem on one instance.
AttachmentVdReport check_attachment_vd(const AttachmentSpec& spec, const Limits& limits = {});

}  // namespace cmg

#endif
