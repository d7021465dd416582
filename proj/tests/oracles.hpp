// Brute-force reference implementations for the unit and acceptance tests.
// They use only adjacency queries and subset enumeration, never the library's
// search code, so agreement between the two is meaningful.
#ifndef CMGRAPH_TESTS_ORACLES_HPP
#define CMGRAPH_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "cmgraph/graph.hpp"

namespace oracle {

using cmg::SimpleGraph;
using cmg::VertexSet;

inline bool independent(const SimpleGraph& g, VertexSet s) {
  for (int v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

/// Every independent subset of `within`, by increasing bits.
inline std::vector<VertexSet> independent_sets(const SimpleGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  const std::uint64_t w = within.bits();
  // Enumerate submasks of w in increasing order.
  std::uint64_t sub = 0;
  while (true) {
    if (independent(g, VertexSet(sub))) out.emplace_back(sub);
    if (sub == w) break;
    sub = (sub - w) & w;
  }
  return out;
}

/// Maximal independent sets by filtering all 2^n subsets, by increasing bits.
inline std::vector<VertexSet> maximal_independent_sets(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  for (VertexSet s : oracle::independent_sets(g, g.all())) {
    bool maximal = true;
    for (int v = 0; v < g.order() && maximal; ++v) {
      if (!s.contains(v) && independent(g, s.with(v))) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

inline bool unmixed(const SimpleGraph& g) {
  const auto mis = oracle::maximal_independent_sets(g);
  return std::all_of(mis.begin(), mis.end(), [&](VertexSet s) { return s.size() == mis.front().size(); });
}

/// Exchange condition over every independent set (not only maximal ones),
/// inside the subgraph induced on `within`.
inline bool exchange(const SimpleGraph& g, VertexSet within, int x) {
  const VertexSet nx = g.neighbors(x) & within;
  for (VertexSet s : independent_sets(g, within - g.closed_neighbors(x))) {
    bool found = false;
    for (int y : nx) found = found || !g.neighbors(y).intersects(s);
    if (!found) return false;
  }
  return true;
}

/// Graph-level vertex decomposability straight from the recursive definition,
/// without component splitting. Exponential; memoized per subset.
class VertexDecomposable {
 public:
  explicit VertexDecomposable(const SimpleGraph& g) : g_(g) {}
  bool operator()() { return check(g_.all()); }
  bool check(VertexSet s) {
    if (independent(g_, s)) return true;
    if (const auto hit = memo_.find(s.bits()); hit != memo_.end()) return hit->second;
    bool ok = false;
    for (int x : s) {
      if (exchange(g_, s, x) && check(s.without(x)) && check(s - g_.closed_neighbors(x))) {
        ok = true;
        break;
      }
    }
    memo_[s.bits()] = ok;
    return ok;
  }

 private:
  const SimpleGraph& g_;
  std::map<std::uint64_t, bool> memo_;
};

/// True iff some vertex subset of size >= 4 induces a cycle.
inline bool has_chordless_cycle(const SimpleGraph& g) {
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const VertexSet s(bits);
    if (s.size() < 4) continue;
    bool two_regular = true;
    for (int v : s) two_regular = two_regular && (g.neighbors(v) & s).size() == 2;
    if (!two_regular) continue;
    // 2-regular and connected means one cycle.
    VertexSet seen = VertexSet::single(s.front());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v) & s;
      frontier = next - seen;
      seen |= next;
    }
    if (seen == s) return true;
  }
  return false;
}

/// Faces generated by the facets, grouped by size.
inline std::vector<std::vector<VertexSet>> faces_by_size(const std::vector<VertexSet>& facets) {
  std::vector<std::uint64_t> all;
  for (VertexSet f : facets) {
    const std::uint64_t w = f.bits();
    std::uint64_t sub = 0;
    while (true) {
      all.push_back(sub);
      if (sub == w) break;
      sub = (sub - w) & w;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  int top = 0;
  for (VertexSet f : facets) top = std::max(top, f.size());
  std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(top) + 1);
  if (facets.empty()) return {};
  for (std::uint64_t b : all) out[static_cast<std::size_t>(std::popcount(b))].emplace_back(b);
  return out;
}

/// Rank over GF(2) of a dense 0/1 matrix given as rows of bit-vectors.
inline long gf2_rank(std::vector<std::vector<bool>> rows) {
  long rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols; ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [c](const auto& r) { return r[c]; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && rows[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] != rows[static_cast<std::size_t>(rank)][k];
      }
    }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers over GF(2) by dense elimination; index 0 is dimension -1.
inline std::vector<long> reduced_betti_gf2(const std::vector<VertexSet>& facets) {
  const auto levels = faces_by_size(facets);
  if (levels.empty()) return {};
  // rank of the boundary map from size-k faces to size-(k-1) faces
  std::vector<long> boundary(levels.size() + 1, 0);
  for (std::size_t k = 1; k < levels.size(); ++k) {
    const auto& lower = levels[k - 1];
    std::vector<std::vector<bool>> rows;
    for (VertexSet f : levels[k]) {
      std::vector<bool> row(lower.size(), false);
      for (int v : f) {
        const auto at = std::lower_bound(lower.begin(), lower.end(), f.without(v));
        row[static_cast<std::size_t>(at - lower.begin())] = true;
      }
      rows.push_back(std::move(row));
    }
    boundary[k] = gf2_rank(std::move(rows));
  }
  std::vector<long> betti;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    betti.push_back(static_cast<long>(levels[k].size()) - boundary[k] - boundary[k + 1]);
  }
  return betti;
}

/// Nonpure shelling check straight from the definition: each facet meets the
/// earlier ones in a complex whose facets all have one vertex less.
inline bool is_shelling(const std::vector<VertexSet>& order) {
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::vector<VertexSet> meets;
    for (std::size_t i = 0; i < j; ++i) meets.push_back(order[i] & order[j]);
    for (VertexSet m : meets) {
      const bool maximal = std::none_of(meets.begin(), meets.end(), [m](VertexSet o) { return o != m && m.subset_of(o); });
      if (maximal && m.size() != order[j].size() - 1) return false;
    }
  }
  return true;
}

/// Tries every facet order. Intended for at most 7 facets.
inline bool shellable(std::vector<VertexSet> facets) {
  std::sort(facets.begin(), facets.end());
  do {
    if (is_shelling(facets)) return true;
  } while (std::next_permutation(facets.begin(), facets.end()));
  return false;
}

}  // namespace oracle

#endif
