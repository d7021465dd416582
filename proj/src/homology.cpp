#include <algorithm>
#include <numeric>
#include <utility>

#include <boost/multiprecision/gmp.hpp>

#include "cmgraph/errors.hpp"
#include "homology_internal.hpp"

namespace cmg::detail {

namespace {

using Rational = boost::multiprecision::mpq_rational;

int row_index(const std::vector<VertexSet>& rows, VertexSet face) {
  const auto it = std::lower_bound(rows.begin(), rows.end(), face);
  return static_cast<int>(it - rows.begin());
}

long rank_gf2(const std::vector<VertexSet>& cols, const std::vector<VertexSet>& rows) {
  std::vector<std::vector<int>> pivots(rows.size());
  std::vector<int> col;
  std::vector<int> merged;
  long rank = 0;
  for (VertexSet face : cols) {
    col.clear();
    for (int v : face) col.push_back(row_index(rows, face.without(v)));
    std::sort(col.begin(), col.end());
    while (!col.empty()) {
      auto& pivot = pivots[static_cast<std::size_t>(col.back())];
      if (pivot.empty()) {
        pivot = col;
        ++rank;
        break;
      }
      merged.clear();
      std::set_symmetric_difference(col.begin(), col.end(), pivot.begin(), pivot.end(), std::back_inserter(merged));
      col.swap(merged);
    }
  }
  return rank;
}

using QColumn = std::vector<std::pair<int, Rational>>;

long rank_q(const std::vector<VertexSet>& cols, const std::vector<VertexSet>& rows) {
  std::vector<QColumn> pivots(rows.size());
  QColumn col;
  QColumn merged;
  long rank = 0;
  for (VertexSet face : cols) {
    col.clear();
    int position = 0;
    // Faces are ordered by vertex index; removing the k-th vertex carries sign (-1)^k.
    for (int v : face) {
      col.emplace_back(row_index(rows, face.without(v)), Rational(position % 2 == 0 ? 1 : -1));
      ++position;
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!col.empty()) {
      auto& pivot = pivots[static_cast<std::size_t>(col.back().first)];
      if (pivot.empty()) {
        pivot = col;
        ++rank;
        break;
      }
      const Rational factor = col.back().second / pivot.back().second;
      merged.clear();
      auto a = col.begin();
      auto b = pivot.begin();
      while (a != col.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != col.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == col.end() || b->first < a->first) {
          merged.emplace_back(b->first, -factor * b->second);
          ++b;
        } else {
          Rational value = a->second - factor * b->second;
          if (value != 0) merged.emplace_back(a->first, std::move(value));
          ++a;
          ++b;
        }
      }
      col.swap(merged);
    }
  }
  return rank;
}

}  // namespace

FaceLevels close_downward(const std::vector<VertexSet>& facets, std::size_t cap) {
  if (facets.empty()) return {};
  std::size_t top = 0;
  for (VertexSet f : facets) top = std::max(top, static_cast<std::size_t>(f.size()));
  FaceLevels levels(top + 1);
  for (VertexSet f : facets) levels[static_cast<std::size_t>(f.size())].push_back(f);
  std::size_t total = 0;
  for (std::size_t k = top + 1; k-- > 0;) {
    auto& level = levels[k];
    if (k + 1 <= top) {
      for (VertexSet f : levels[k + 1]) {
        for (int v : f) level.push_back(f.without(v));
      }
    }
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    total += level.size();
    if (total > cap) throw CapExceeded("face-count", cap, total);
  }
  return levels;
}

long boundary_rank(const FaceLevels& levels, std::size_t k, Field field) {
  if (k == 0 || k >= levels.size()) return 0;
  if (k == 1) return levels[1].empty() ? 0 : 1;
  return field == Field::GF2 ? rank_gf2(levels[k], levels[k - 1]) : rank_q(levels[k], levels[k - 1]);
}

std::vector<long> reduced_betti(const FaceLevels& levels, Field field) {
  // rank[k]: boundary rank out of faces of size k; index levels.size() is 0.
  std::vector<long> rank(levels.size() + 1, 0);
  for (std::size_t k = 1; k < levels.size(); ++k) rank[k] = boundary_rank(levels, k, field);
  std::vector<long> betti;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    betti.push_back(static_cast<long>(levels[k].size()) - rank[k] - rank[k + 1]);
  }
  return betti;
}

std::optional<int> first_nonzero_betti(const FaceLevels& levels, Field field, int from, int to) {
  // Dimension i lives at face size i + 1.
  long rank_below = boundary_rank(levels, static_cast<std::size_t>(from + 1), field);
  for (int i = from; i <= to; ++i) {
    const auto k = static_cast<std::size_t>(i + 1);
    if (k >= levels.size()) break;
    const long rank_above = boundary_rank(levels, k + 1, field);
    if (static_cast<long>(levels[k].size()) - rank_below - rank_above != 0) return i;
    rank_below = rank_above;
  }
  return std::nullopt;
}

int component_count(const std::vector<VertexSet>& facets) {
  std::vector<VertexSet> comps;
  for (VertexSet f : facets) {
    if (f.empty()) continue;
    VertexSet merged = f;
    std::vector<VertexSet> rest;
    for (VertexSet c : comps) {
      if (c.intersects(merged)) {
        merged |= c;
      } else {
        rest.push_back(c);
      }
    }
    rest.push_back(merged);
    comps.swap(rest);
  }
  return static_cast<int>(comps.size());
}

}  // namespace cmg::detail
