#include "cmgraph/independence.hpp"

#include <algorithm>

#include "cmgraph/errors.hpp"

namespace cmg {

namespace {

/// Bron-Kerbosch with pivoting on the complement of g restricted to `within_`:
/// cliques of the complement are the independent sets of g.
class MisEnumerator {
 public:
  MisEnumerator(const SimpleGraph& g, VertexSet within, const std::function<bool(VertexSet)>& visit)
      : g_(g), within_(within), visit_(visit) {}

  bool run() { return expand(VertexSet{}, within_, VertexSet{}); }

 private:
  VertexSet non_neighbors(int v) const { return within_ - g_.closed_neighbors(v); }

  bool expand(VertexSet chosen, VertexSet candidates, VertexSet excluded) {
    if (candidates.empty()) {
      return excluded.empty() ? visit_(chosen) : true;
    }
    int pivot = -1;
    int best = -1;
    for (int u : candidates | excluded) {
      const int score = (candidates & non_neighbors(u)).size();
      if (score > best) {
        best = score;
        pivot = u;
      }
    }
    for (int v : candidates - non_neighbors(pivot)) {
      const VertexSet keep = non_neighbors(v);
      if (!expand(chosen.with(v), candidates & keep, excluded & keep)) return false;
      candidates = candidates.without(v);
      excluded = excluded.with(v);
    }
    return true;
  }

  const SimpleGraph& g_;
  VertexSet within_;
  const std::function<bool(VertexSet)>& visit_;
};

}  // namespace

bool IndependentSetFamily::contains(VertexSet s) const {
  return std::binary_search(sets.begin(), sets.end(), s, canonical_less);
}

void check_vertex_cap(const SimpleGraph& g, const Limits& limits) {
  if (static_cast<std::size_t>(g.order()) > limits.vertex_cap) {
    throw CapExceeded("vertex", limits.vertex_cap, static_cast<std::size_t>(g.order()));
  }
}

bool for_each_maximal_independent_set(const SimpleGraph& g, VertexSet within,
                                      const std::function<bool(VertexSet)>& visit) {
  return MisEnumerator(g, within, visit).run();
}

std::vector<VertexSet> maximal_independent_sets_within(const SimpleGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  for_each_maximal_independent_set(g, within, [&](VertexSet s) {
    out.push_back(s);
    return true;
  });
  return out;
}

IndependentSetFamily maximal_independent_sets(const SimpleGraph& g, const Limits& limits) {
  check_vertex_cap(g, limits);
  IndependentSetFamily family{maximal_independent_sets_within(g, g.all())};
  std::sort(family.sets.begin(), family.sets.end(), canonical_less);
  return family;
}

int independence_number(const SimpleGraph& g, const Limits& limits) {
  check_vertex_cap(g, limits);
  int alpha = 0;
  for_each_maximal_independent_set(g, g.all(), [&](VertexSet s) {
    alpha = std::max(alpha, s.size());
    return true;
  });
  return alpha;
}

UnmixedVerdict is_unmixed(const SimpleGraph& g, const Limits& limits) {
  const auto family = maximal_independent_sets(g, limits);
  // Canonical order makes the first smallest / first largest reproducible.
  auto smallest = family.sets.begin();
  auto largest = family.sets.begin();
  for (auto it = family.sets.begin(); it != family.sets.end(); ++it) {
    if (it->size() < smallest->size()) smallest = it;
    if (it->size() > largest->size()) largest = it;
  }
  UnmixedVerdict verdict;
  verdict.alpha = largest->size();
  verdict.holds = smallest->size() == largest->size();
  if (!verdict.holds) verdict.witness = std::make_pair(*smallest, *largest);
  return verdict;
}

bool cycle_deletion_unmixed(int m) {
  if (m < 3) throw PreconditionError("cycle length must be at least 3, got " + std::to_string(m));
  const SimpleGraph c = make_family(Family::cycle, m);
  return is_unmixed(c.induced(c.all().without(0))).holds;
}

SimplicialComplex independence_complex(const SimpleGraph& g, const Limits& limits) {
  const auto family = maximal_independent_sets(g, limits);
  auto universe = std::make_shared<const std::vector<VertexLabel>>(g.labels());
  return SimplicialComplex::from_antichain(std::move(universe), g.all(), family.sets);
}

}  // namespace cmg
