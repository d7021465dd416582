#ifndef CMGRAPH_CONSTRUCTION_HPP
#define CMGRAPH_CONSTRUCTION_HPP

#include <istream>
#include <string>
#include <vector>

#include "cmgraph/graph.hpp"

namespace cmg {

struct Part {
  SimpleGraph graph;
  VertexLabel attach_at;
};

/// Base graph plus one part per base vertex; parts[i] hangs off the i-th base
/// vertex in label order.
struct AttachmentSpec {
  SimpleGraph base;
  std::vector<Part> parts;

  /// Throws PreconditionError naming the offending part (1-based) when the part
  /// count is wrong, a part is disconnected or has fewer than 2 vertices,
  /// attach_at is not a vertex of its part, or two parts share a label.
  void validate() const;
};

/// The attached graph. Part i's vertices become "i.1" (the attachment vertex,
/// which plays the role of base vertex i) and "i.2".."i.m" in the part's label
/// order. Base edges join the corresponding "i.1" vertices.
SimpleGraph attach(const AttachmentSpec& spec);

/// attach() with n copies of one part.
SimpleGraph attach_uniform(const SimpleGraph& base, const SimpleGraph& part, const VertexLabel& attach_at);

/// The attachment vertices "1.1".."n.1" of an attached graph with n parts, as indices.
VertexSet attachment_vertices(const SimpleGraph& attached, int parts);
/// Vertices "i.*" of part i (1-based) inside an attached graph.
VertexSet part_vertices(const SimpleGraph& attached, int part);

// Attachment-spec text format:
//   base:
//   <edge list>
//   part <i> attach <label>:
//   <edge list>
//   ...
// Sections use the edge-list grammar. Part labels are scoped to their section
// (internally qualified as "<i>.<label>"), so parts may reuse names.
AttachmentSpec parse_attachment_spec(std::istream& in);
AttachmentSpec parse_attachment_spec_string(const std::string& text);
/// Part sections only; `base` supplies the base graph.
AttachmentSpec parse_parts(std::istream& in, SimpleGraph base);

}  // namespace cmg

#endif
