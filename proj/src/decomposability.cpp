#include "cmgraph/decomposability.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "cmgraph/errors.hpp"
#include "cmgraph/independence.hpp"

namespace cmg {

bool satisfies_exchange_within(const SimpleGraph& g, VertexSet within, int x) {
  const VertexSet nx = g.neighbors(x) & within;
  const VertexSet rest = within - g.closed_neighbors(x);
  // Fails iff some maximal independent set of the rest dominates all of N(x).
  return for_each_maximal_independent_set(g, rest, [&](VertexSet s) {
    for (int y : nx) {
      if (!g.neighbors(y).intersects(s)) return true;
    }
    return false;
  });
}

namespace {

class VdSearch {
 public:
  using Node = std::shared_ptr<const VdNode>;

  explicit VdSearch(const SimpleGraph& g) : g_(g) {}

  bool decomposable(VertexSet s) {
    for (VertexSet c : g_.components_within(s)) {
      if (c.size() > 1 && !connected(c)) return false;
    }
    return true;
  }

  Node certificate(VertexSet s) {
    if (const auto hit = nodes_.find(s); hit != nodes_.end()) return hit->second;
    auto node = std::make_shared<VdNode>();
    node->vertices = s;
    if (!g_.has_edges_within(s)) {
      node->kind = VdNode::Kind::leaf;
    } else {
      const auto comps = g_.components_within(s);
      if (comps.size() == 1) {
        const int x = chosen_.at(s);
        node->kind = VdNode::Kind::shed;
        node->vertex = x;
        node->children = {certificate(s.without(x)), certificate(s - g_.closed_neighbors(x))};
      } else {
        node->kind = VdNode::Kind::split;
        for (VertexSet c : comps) {
          if (c.size() > 1) node->children.push_back(certificate(c));
        }
      }
    }
    nodes_.emplace(s, node);
    return node;
  }

  VertexSet smallest_failure() const { return failing_; }

 private:
  bool connected(VertexSet c) {
    if (const auto hit = memo_.find(c); hit != memo_.end()) return hit->second;
    std::vector<int> order = c.to_vector();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return (g_.neighbors(a) & c).size() > (g_.neighbors(b) & c).size();
    });
    bool ok = false;
    for (int x : order) {
      if (!satisfies_exchange_within(g_, c, x)) continue;
      if (decomposable(c.without(x)) && decomposable(c - g_.closed_neighbors(x))) {
        chosen_.emplace(c, x);
        ok = true;
        break;
      }
    }
    if (!ok && (failing_.empty() || c.size() < failing_.size())) failing_ = c;
    memo_.emplace(c, ok);
    return ok;
  }

  const SimpleGraph& g_;
  std::unordered_map<VertexSet, bool> memo_;
  std::unordered_map<VertexSet, int> chosen_;
  std::unordered_map<VertexSet, Node> nodes_;
  VertexSet failing_;
};

}  // namespace

bool satisfies_exchange(const SimpleGraph& g, const VertexLabel& x) {
  return satisfies_exchange_within(g, g.all(), g.index_of(x));
}

bool is_shedding_vertex(const SimpleGraph& g, const VertexLabel& x, const Limits& limits) {
  check_vertex_cap(g, limits);
  const int v = g.index_of(x);
  if (!satisfies_exchange_within(g, g.all(), v)) return false;
  VdSearch search(g);
  return search.decomposable(g.all().without(v)) && search.decomposable(g.all() - g.closed_neighbors(v));
}

VdCertificate is_vertex_decomposable(const SimpleGraph& g, const Limits& limits) {
  check_vertex_cap(g, limits);
  VdSearch search(g);
  VdCertificate cert;
  cert.outcome = search.decomposable(g.all());
  if (cert.outcome) {
    cert.tree = search.certificate(g.all());
  } else {
    cert.failing = search.smallest_failure();
  }
  return cert;
}

namespace {

bool replay_node(const SimpleGraph& g, const VdNode& node, std::unordered_map<const VdNode*, bool>& seen) {
  if (const auto hit = seen.find(&node); hit != seen.end()) return hit->second;
  bool ok = false;
  const VertexSet s = node.vertices;
  switch (node.kind) {
    case VdNode::Kind::leaf:
      ok = !g.has_edges_within(s);
      break;
    case VdNode::Kind::shed: {
      const int x = node.vertex;
      ok = x >= 0 && s.contains(x) && node.children.size() == 2 && g.components_within(s).size() == 1 &&
           node.children[0]->vertices == s.without(x) &&
           node.children[1]->vertices == s - g.closed_neighbors(x) && satisfies_exchange_within(g, s, x) &&
           replay_node(g, *node.children[0], seen) && replay_node(g, *node.children[1], seen);
      break;
    }
    case VdNode::Kind::split: {
      std::vector<VertexSet> expected;
      for (VertexSet c : g.components_within(s)) {
        if (c.size() > 1) expected.push_back(c);
      }
      ok = expected.size() == node.children.size();
      for (std::size_t i = 0; ok && i < expected.size(); ++i) {
        ok = node.children[i]->vertices == expected[i] && replay_node(g, *node.children[i], seen);
      }
      break;
    }
  }
  seen.emplace(&node, ok);
  return ok;
}

std::string set_text(const SimpleGraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    out += (first ? "" : ",") + g.label(v).str();
    first = false;
  }
  return out + "}";
}

void format_node(const SimpleGraph& g, const VdNode& node, const std::string& branch, int depth,
                 std::map<const VdNode*, int>& ids, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << branch;
  if (const auto hit = ids.find(&node); hit != ids.end()) {
    out << "= #" << hit->second << '\n';
    return;
  }
  const int id = static_cast<int>(ids.size()) + 1;
  ids.emplace(&node, id);
  out << '#' << id << ' ';
  switch (node.kind) {
    case VdNode::Kind::leaf:
      out << "leaf " << set_text(g, node.vertices) << '\n';
      return;
    case VdNode::Kind::shed:
      out << "shed " << g.label(node.vertex) << " on " << set_text(g, node.vertices) << '\n';
      format_node(g, *node.children[0], "del: ", depth + 1, ids, out);
      format_node(g, *node.children[1], "link: ", depth + 1, ids, out);
      return;
    case VdNode::Kind::split:
      out << "components of " << set_text(g, node.vertices) << '\n';
      for (const auto& child : node.children) format_node(g, *child, "part: ", depth + 1, ids, out);
      return;
  }
}

}  // namespace

bool replay_certificate(const SimpleGraph& g, const VdCertificate& cert) {
  if (!cert.outcome || !cert.tree || cert.tree->vertices != g.all()) return false;
  std::unordered_map<const VdNode*, bool> seen;
  return replay_node(g, *cert.tree, seen);
}

std::string format_certificate(const SimpleGraph& g, const VdCertificate& cert) {
  std::ostringstream out;
  if (!cert.outcome) {
    out << "not decomposable; smallest failing induced subgraph " << set_text(g, cert.failing) << '\n';
    return out.str();
  }
  std::map<const VdNode*, int> ids;
  format_node(g, *cert.tree, "", 0, ids, out);
  return out.str();
}

AttachmentVdReport check_attachment_vd(const AttachmentSpec& spec, const Limits& limits) {
  spec.validate();
  AttachmentVdReport report;
  report.parts_vd = true;
  report.attachments_shedding = true;
  for (const auto& part : spec.parts) {
    report.parts_vd = report.parts_vd && is_vertex_decomposable(part.graph, limits).outcome;
    report.attachments_shedding =
        report.attachments_shedding && is_shedding_vertex(part.graph, part.attach_at, limits);
  }
  report.attached_vd = is_vertex_decomposable(attach(spec), limits).outcome;
  if (report.parts_vd && report.attachments_shedding && !report.attached_vd) {
    report.violations.emplace_back("decomposable parts with shedding attachment vertices, but the attached graph is not decomposable");
  }
  if (report.attached_vd && !report.parts_vd) {
    report.violations.emplace_back("attached graph is decomposable, but some part is not");
  }
  return report;
}

}  // namespace cmg
