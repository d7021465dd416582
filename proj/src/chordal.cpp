#include "cmgraph/chordal.hpp"

#include <algorithm>
#include <deque>

#include "cmgraph/errors.hpp"
#include "cmgraph/independence.hpp"

namespace cmg {

namespace {

/// Maximum-cardinality search; returns the visit order.
std::vector<int> mcs_order(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet unnumbered = g.all();
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  while (!unnumbered.empty()) {
    int best = unnumbered.front();
    for (int v : unnumbered) {
      if (weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    }
    visit.push_back(best);
    unnumbered = unnumbered.without(best);
    for (int u : g.neighbors(best) & unnumbered) ++weight[static_cast<std::size_t>(u)];
  }
  return visit;
}

/// Shortest u-w path inside `allowed`, endpoints included; empty if none.
std::vector<int> shortest_path(const SimpleGraph& g, int u, int w, VertexSet allowed) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{u};
  VertexSet seen = VertexSet::single(u);
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    if (a == w) break;
    for (int b : (g.neighbors(a) & allowed) - seen) {
      seen = seen.with(b);
      parent[static_cast<std::size_t>(b)] = a;
      queue.push_back(b);
    }
  }
  if (!seen.contains(w)) return {};
  std::vector<int> path;
  for (int a = w; a != -1; a = parent[static_cast<std::size_t>(a)]) path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Cycle through v and its nonadjacent neighbors u, w avoiding the rest of N[v].
std::vector<int> cycle_through(const SimpleGraph& g, int v, int u, int w) {
  const VertexSet allowed = (g.all() - g.closed_neighbors(v)) | VertexSet::single(u) | VertexSet::single(w);
  std::vector<int> path = shortest_path(g, u, w, allowed);
  if (path.empty()) return {};
  path.insert(path.begin(), v);
  return path;
}

std::vector<int> find_chordless_cycle(const SimpleGraph& g) {
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbors(v)) {
      for (int w : g.neighbors(v) - VertexSet::first_n(u + 1) - g.neighbors(u)) {
        if (auto cycle = cycle_through(g, v, u, w); !cycle.empty()) return cycle;
      }
    }
  }
  return {};
}

}  // namespace

ChordalVerdict is_chordal(const SimpleGraph& g) {
  std::vector<int> order = mcs_order(g);
  std::reverse(order.begin(), order.end());
  std::vector<int> position(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  ChordalVerdict verdict;
  for (int v : order) {
    VertexSet later;
    for (int u : g.neighbors(v)) {
      if (position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(v)]) later = later.with(u);
    }
    if (later.empty()) continue;
    int parent = later.front();
    for (int u : later) {
      if (position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(parent)]) parent = u;
    }
    const VertexSet missing = later.without(parent) - g.neighbors(parent);
    if (!missing.empty()) {
      verdict.chordless_cycle = cycle_through(g, v, parent, missing.front());
      if (verdict.chordless_cycle.empty()) verdict.chordless_cycle = find_chordless_cycle(g);
      return verdict;
    }
  }
  verdict.holds = true;
  verdict.elimination_order = std::move(order);
  return verdict;
}

bool is_perfect_elimination_order(const SimpleGraph& g, const std::vector<int>& order) {
  if (order.size() != static_cast<std::size_t>(g.order())) return false;
  VertexSet remaining = g.all();
  for (int v : order) {
    if (v < 0 || v >= g.order() || !remaining.contains(v)) return false;
    const VertexSet later = g.neighbors(v) & remaining;
    for (int u : later) {
      if (!(later.without(u)).subset_of(g.neighbors(u))) return false;
    }
    remaining = remaining.without(v);
  }
  return true;
}

bool is_chordless_cycle(const SimpleGraph& g, const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  VertexSet members;
  for (int v : cycle) members = members.with(v);
  if (members.size() != static_cast<int>(k)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const int v = cycle[i];
    const VertexSet expected = VertexSet::single(cycle[(i + 1) % k]) | VertexSet::single(cycle[(i + k - 1) % k]);
    if ((g.neighbors(v) & members) != expected) return false;
  }
  return true;
}

bool is_simplicial(const SimpleGraph& g, int v) {
  const VertexSet n = g.neighbors(v);
  for (int u : n) {
    if (!n.without(u).subset_of(g.neighbors(u))) return false;
  }
  return true;
}

VertexSet simplicial_vertices(const SimpleGraph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (is_simplicial(g, v)) out = out.with(v);
  }
  return out;
}

VertexSet valid_attachment_points(const SimpleGraph& g) {
  if (g.order() < 2) throw PreconditionError("attachment points need at least 2 vertices");
  if (!is_chordal(g).holds) throw PreconditionError("attachment points are defined for chordal graphs only");
  VertexSet out;
  for (int v : simplicial_vertices(g)) out |= g.neighbors(v);
  return out;
}

ChordalDeletionReport check_chordal_deletion_unmixed(const SimpleGraph& g, const Limits& limits) {
  if (!is_chordal(g).holds) throw PreconditionError("graph is not chordal");
  if (!is_unmixed(g, limits).holds) throw PreconditionError("graph is not unmixed");
  const VertexSet simplicial = simplicial_vertices(g);
  const bool any = std::any_of(simplicial.begin(), simplicial.end(), [&](int v) { return g.degree(v) > 0; });
  if (!any) throw PreconditionError("no simplicial vertex of positive degree");

  ChordalDeletionReport report;
  for (int x : simplicial) {
    for (int y : g.neighbors(x)) {
      ++report.pairs_checked;
      if (!is_unmixed(g.induced(g.all().without(y)), limits).holds) {
        report.violations.push_back("x=" + g.label(x).str() + " y=" + g.label(y).str());
      }
    }
  }
  return report;
}

}  // namespace cmg
