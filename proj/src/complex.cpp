#include "cmgraph/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cmgraph/errors.hpp"
#include "homology_internal.hpp"

namespace cmg {

namespace {

std::vector<VertexSet> maximal_only(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return s.subset_of(k); });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), canonical_less);
  return kept;
}

struct FacetsHash {
  std::size_t operator()(const std::vector<VertexSet>& v) const noexcept {
    std::size_t h = v.size();
    for (VertexSet s : v) h ^= std::hash<VertexSet>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

SimplicialComplex SimplicialComplex::from_antichain(Universe universe, VertexSet ground, std::vector<VertexSet> facets) {
  SimplicialComplex c;
  c.universe_ = std::move(universe);
  c.ground_ = ground;
  c.facets_ = std::move(facets);
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(Universe universe, VertexSet ground, std::vector<VertexSet> facets) {
  if (ground.size() > static_cast<int>(universe->size()) ||
      !ground.subset_of(VertexSet::first_n(static_cast<int>(universe->size())))) {
    throw GraphError("ground set exceeds the universe");
  }
  for (VertexSet f : facets) {
    if (!f.subset_of(ground)) throw GraphError("facet uses a vertex outside the ground set");
  }
  return from_antichain(std::move(universe), ground, maximal_only(std::move(facets)));
}

SimplicialComplex SimplicialComplex::from_label_facets(const std::vector<std::vector<VertexLabel>>& facets,
                                                       const std::vector<VertexLabel>& ground) {
  std::set<VertexLabel> all(ground.begin(), ground.end());
  for (const auto& f : facets) all.insert(f.begin(), f.end());
  if (all.size() > static_cast<std::size_t>(VertexSet::kCapacity)) throw GraphError("too many vertices for a complex");
  auto universe = std::make_shared<const std::vector<VertexLabel>>(all.begin(), all.end());
  SimplicialComplex proto = from_antichain(universe, VertexSet::first_n(static_cast<int>(universe->size())), {});
  std::vector<VertexSet> sets;
  for (const auto& f : facets) sets.push_back(proto.set_of(f));
  return from_facets(universe, proto.ground(), std::move(sets));
}

SimplicialComplex SimplicialComplex::void_complex(Universe universe, VertexSet ground) {
  return from_antichain(std::move(universe), ground, {});
}

SimplicialComplex SimplicialComplex::irrelevant(Universe universe, VertexSet ground) {
  return from_antichain(std::move(universe), ground, {VertexSet{}});
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet all;
  for (VertexSet f : facets_) all |= f;
  return all;
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw PreconditionError("the void complex has no dimension");
  int top = 0;
  for (VertexSet f : facets_) top = std::max(top, f.size());
  return top - 1;
}

bool SimplicialComplex::contains_face(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.subset_of(f); });
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size(const Limits& limits) const {
  return detail::close_downward(facets_, limits.face_cap);
}

std::size_t SimplicialComplex::face_count(const Limits& limits) const {
  std::size_t n = 0;
  for (const auto& level : faces_by_size(limits)) n += level.size();
  return n;
}

std::vector<VertexLabel> SimplicialComplex::labels_of(VertexSet face) const {
  std::vector<VertexLabel> out;
  for (int v : face) out.push_back((*universe_)[static_cast<std::size_t>(v)]);
  return out;
}

VertexSet SimplicialComplex::set_of(const std::vector<VertexLabel>& labels) const {
  VertexSet s;
  for (const auto& l : labels) {
    const auto it = std::lower_bound(universe_->begin(), universe_->end(), l);
    if (it == universe_->end() || !(*it == l)) throw GraphError("unknown vertex '" + l.str() + "'");
    s = s.with(static_cast<int>(it - universe_->begin()));
  }
  return s;
}

bool SimplicialComplex::same_faces(const SimplicialComplex& other) const {
  if (facets_.size() != other.facets_.size()) return false;
  std::set<std::vector<VertexLabel>> mine;
  std::set<std::vector<VertexLabel>> theirs;
  for (VertexSet f : facets_) mine.insert(labels_of(f));
  for (VertexSet f : other.facets_) theirs.insert(other.labels_of(f));
  return mine == theirs;
}

std::string to_string(Field f) { return f == Field::GF2 ? "gf2" : "q"; }

long HomologyProfile::rank(int dim) const {
  const int i = dim + 1;
  if (i < 0 || i >= static_cast<int>(ranks.size())) return 0;
  return ranks[static_cast<std::size_t>(i)];
}

long HomologyProfile::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < ranks.size(); ++k) chi += (k % 2 == 0 ? -1 : 1) * ranks[k];
  return chi;
}

long reduced_euler_characteristic(const SimplicialComplex& c, const Limits& limits) {
  const auto levels = c.faces_by_size(limits);
  long chi = 0;
  // A face with k vertices has dimension k - 1.
  for (std::size_t k = 0; k < levels.size(); ++k) chi += (k % 2 == 0 ? -1 : 1) * static_cast<long>(levels[k].size());
  return chi;
}

SimplicialComplex link(const SimplicialComplex& c, VertexSet face) {
  std::vector<VertexSet> out;
  for (VertexSet f : c.facets()) {
    if (face.subset_of(f)) out.push_back(f - face);
  }
  if (out.empty()) throw PreconditionError("link of a set that is not a face");
  // Facets containing `face` form an antichain, and so do their differences with it.
  std::sort(out.begin(), out.end(), canonical_less);
  return SimplicialComplex::from_antichain(c.universe(), c.ground() - face, std::move(out));
}

SimplicialComplex deletion(const SimplicialComplex& c, VertexSet removed) {
  if (c.is_void()) return SimplicialComplex::void_complex(c.universe(), c.ground() - removed);
  std::vector<VertexSet> out;
  for (VertexSet f : c.facets()) out.push_back(f - removed);
  return SimplicialComplex::from_facets(c.universe(), c.ground() - removed, std::move(out));
}

bool is_pure(const SimplicialComplex& c) {
  if (c.is_void()) throw PreconditionError("purity of the void complex");
  const int size = c.facets().front().size();
  return std::all_of(c.facets().begin(), c.facets().end(), [&](VertexSet f) { return f.size() == size; });
}

SimplicialComplex pure_skeleton(const SimplicialComplex& c, int dim) {
  if (c.is_void()) throw PreconditionError("skeleton of the void complex");
  if (dim < -1 || dim > c.dimension()) throw PreconditionError("skeleton dimension out of range");
  const auto levels = detail::close_downward(c.facets(), Limits{}.face_cap);
  auto facets = levels[static_cast<std::size_t>(dim + 1)];
  std::sort(facets.begin(), facets.end(), canonical_less);
  return SimplicialComplex::from_antichain(c.universe(), c.ground(), std::move(facets));
}

HomologyProfile reduced_homology(const SimplicialComplex& c, Field field, const Limits& limits) {
  if (c.is_void()) throw PreconditionError("reduced homology of the void complex");
  return HomologyProfile{field, detail::reduced_betti(c.faces_by_size(limits), field)};
}

namespace {

/// Reisner's criterion over a face antichain, links memoized by facet list.
class ReisnerChecker {
 public:
  ReisnerChecker(Field field, const Limits& limits) : field_(field), limits_(limits) {}

  CmVerdict check(const std::vector<VertexSet>& facets) {
    CmVerdict verdict;
    verdict.field = field_;
    const auto levels = detail::close_downward(facets, limits_.face_cap);

    // containing[v]: bitmap over facets that contain v.
    const std::size_t words = (facets.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> containing(VertexSet::kCapacity, std::vector<std::uint64_t>(words, 0));
    VertexSet used;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      for (int v : facets[i]) containing[static_cast<std::size_t>(v)][i / 64] |= std::uint64_t{1} << (i % 64);
      used |= facets[i];
    }

    std::vector<std::uint64_t> mask(words);
    std::vector<VertexSet> link_facets;
    // Large faces first: their links are small, and nonpure complexes fail there.
    for (std::size_t k = levels.size(); k-- > 0;) {
      for (VertexSet face : levels[k]) {
        std::fill(mask.begin(), mask.end(), ~std::uint64_t{0});
        for (int v : face) {
          const auto& row = containing[static_cast<std::size_t>(v)];
          for (std::size_t w = 0; w < words; ++w) mask[w] &= row[w];
        }
        link_facets.clear();
        int top = 0;
        for (std::size_t w = 0; w < words; ++w) {
          for (std::uint64_t bits = mask[w]; bits != 0; bits &= bits - 1) {
            const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            if (i >= facets.size()) break;
            link_facets.push_back(facets[i] - face);
            top = std::max(top, link_facets.back().size());
          }
        }
        // Links of dimension <= 0 are nonempty point sets or {∅}: nothing to check.
        if (top <= 1) continue;
        const int bad = failing_dimension(link_facets, top - 1);
        if (bad >= 0) {
          verdict.holds = false;
          verdict.witness_face = face;
          verdict.witness_dim = bad;
          return verdict;
        }
      }
    }
    return verdict;
  }

 private:
  int failing_dimension(std::vector<VertexSet>& link_facets, int dim) {
    // A cone is acyclic.
    VertexSet apex = link_facets.front();
    for (VertexSet f : link_facets) apex &= f;
    if (!apex.empty()) return -1;
    std::sort(link_facets.begin(), link_facets.end());
    const auto hit = memo_.find(link_facets);
    if (hit != memo_.end()) return hit->second;
    int bad = -1;
    if (detail::component_count(link_facets) > 1) {
      bad = 0;
    } else if (dim >= 2) {
      const auto levels = detail::close_downward(link_facets, limits_.face_cap);
      if (auto i = detail::first_nonzero_betti(levels, field_, 1, dim - 1)) bad = *i;
    }
    memo_.emplace(link_facets, bad);
    return bad;
  }

  Field field_;
  Limits limits_;
  std::unordered_map<std::vector<VertexSet>, int, FacetsHash> memo_;
};

}  // namespace

CmVerdict is_cohen_macaulay(const SimplicialComplex& c, Field field, const Limits& limits) {
  if (c.is_void()) throw PreconditionError("Cohen-Macaulay test on the void complex");
  return ReisnerChecker(field, limits).check(c.facets());
}

ScmVerdict is_sequentially_cohen_macaulay(const SimplicialComplex& c, Field field, const Limits& limits) {
  if (c.is_void()) throw PreconditionError("sequentially Cohen-Macaulay test on the void complex");
  ScmVerdict verdict;
  verdict.field = field;
  const auto levels = c.faces_by_size(limits);
  // When no facet has size k, the size-k skeleton is a skeleton of the next one
  // with a facet size, and skeleta of CM complexes are CM.
  std::vector<bool> facet_size(levels.size(), false);
  for (VertexSet f : c.facets()) facet_size[static_cast<std::size_t>(f.size())] = true;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (!facet_size[k]) continue;
    // The pure skeleton generated by the faces of size k, dimension k - 1.
    CmVerdict cm = ReisnerChecker(field, limits).check(levels[k]);
    if (!cm.holds) {
      verdict.holds = false;
      verdict.skeleton_dim = static_cast<int>(k) - 1;
      verdict.skeleton_witness = cm;
      return verdict;
    }
  }
  return verdict;
}

namespace {

/// Whether `next` meets the union of `placed` in a pure complex of codimension one in `next`.
bool extends_shelling(VertexSet next, const std::vector<VertexSet>& placed) {
  const int want = next.size() - 1;
  std::vector<VertexSet> full;
  for (VertexSet p : placed) {
    const VertexSet meet = p & next;
    if (meet.size() == want) full.push_back(meet);
  }
  for (VertexSet p : placed) {
    const VertexSet meet = p & next;
    if (meet.size() == want) continue;
    if (std::none_of(full.begin(), full.end(), [&](VertexSet f) { return meet.subset_of(f); })) return false;
  }
  return true;
}

class ShellingSearch {
 public:
  explicit ShellingSearch(const std::vector<VertexSet>& facets) : facets_(facets) {}

  bool run(std::vector<VertexSet>& order) {
    order.clear();
    return extend(0, order);
  }

 private:
  bool extend(std::uint64_t used, std::vector<VertexSet>& order) {
    if (order.size() == facets_.size()) return true;
    if (refuted_.contains(used)) return false;
    // Some shelling lists facets by nonincreasing size, if any shelling exists.
    int largest = 0;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (!((used >> i) & 1U)) largest = std::max(largest, facets_[i].size());
    }
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (((used >> i) & 1U) || facets_[i].size() != largest) continue;
      if (!order.empty() && !extends_shelling(facets_[i], order)) continue;
      order.push_back(facets_[i]);
      if (extend(used | (std::uint64_t{1} << i), order)) return true;
      order.pop_back();
    }
    refuted_.insert(used);
    return false;
  }

  const std::vector<VertexSet>& facets_;
  std::unordered_set<std::uint64_t> refuted_;
};

}  // namespace

ShellVerdict is_shellable(const SimplicialComplex& c, std::size_t facet_cap) {
  if (c.is_void()) throw PreconditionError("shellability of the void complex");
  if (c.facet_count() > facet_cap) throw CapExceeded("facet", facet_cap, c.facet_count());
  if (c.facet_count() > 63) throw CapExceeded("facet", 63, c.facet_count());
  ShellVerdict verdict;
  // Larger facets first tends to find shellings sooner; any order is explored.
  std::vector<VertexSet> facets = c.facets();
  std::stable_sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  verdict.holds = ShellingSearch(facets).run(verdict.order);
  if (!verdict.holds) verdict.order.clear();
  return verdict;
}

bool is_shelling_order(const SimplicialComplex& c, const std::vector<VertexSet>& order) {
  std::vector<VertexSet> sorted = order;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  if (sorted != c.facets()) return false;
  std::vector<VertexSet> placed;
  for (VertexSet f : order) {
    if (!placed.empty() && !extends_shelling(f, placed)) return false;
    placed.push_back(f);
  }
  return true;
}

namespace {

class VdComplexSearch {
 public:
  using Node = std::shared_ptr<const VdComplexNode>;

  Node solve(const std::vector<VertexSet>& facets) {
    if (facets.size() == 1) {
      static const Node leaf = std::make_shared<const VdComplexNode>();
      return leaf;
    }
    std::vector<VertexSet> key = facets;
    std::sort(key.begin(), key.end());
    if (const auto hit = memo_.find(key); hit != memo_.end()) return hit->second;

    Node result;
    VertexSet vertices;
    for (VertexSet f : facets) vertices |= f;
    for (int x : vertices) {
      std::vector<VertexSet> lk;
      std::vector<VertexSet> del;
      for (VertexSet f : facets) {
        if (f.contains(x)) {
          lk.push_back(f.without(x));
        } else {
          del.push_back(f);
        }
      }
      // Faces A - x with A a facet through x survive in the deletion only when
      // contained in a facet avoiding x; otherwise A - x is a facet of the
      // deletion that is also a face of the link.
      bool shared_facet = false;
      for (VertexSet l : lk) {
        if (std::none_of(del.begin(), del.end(), [&](VertexSet d) { return l.subset_of(d); })) {
          shared_facet = true;
          break;
        }
      }
      if (shared_facet) continue;
      // Here the deletion's facets are exactly `del`.
      Node lnode = solve(lk);
      if (!lnode) continue;
      Node dnode = solve(del);
      if (!dnode) continue;
      result = std::make_shared<const VdComplexNode>(VdComplexNode{x, lnode, dnode});
      break;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::unordered_map<std::vector<VertexSet>, Node, FacetsHash> memo_;
};

}  // namespace

VdComplexVerdict is_vd_complex(const SimplicialComplex& c, const Limits& limits) {
  if (c.is_void()) throw PreconditionError("vertex decomposability of the void complex");
  (void)c.face_count(limits);
  VdComplexSearch search;
  VdComplexVerdict verdict;
  verdict.tree = search.solve(c.facets());
  verdict.holds = verdict.tree != nullptr;
  return verdict;
}

SimplicialComplex parse_facet_list(std::istream& in) {
  std::vector<std::vector<VertexLabel>> facets;
  std::size_t line_no = 0;
  enum class Sentinel { none, void_complex, irrelevant } sentinel = Sentinel::none;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<VertexLabel> facet;
    bool comment = false;
    for (std::string t; ss >> t;) {
      if (facet.empty() && t.front() == '#') {
        comment = true;
        break;
      }
      if (t == "!void" || t == "!irrelevant") {
        if (!facet.empty() || ss >> t) throw ParseError(line_no, "sentinel must stand alone on its line");
        if (sentinel != Sentinel::none || !facets.empty()) throw ParseError(line_no, "sentinel must be the only content");
        sentinel = t == "!void" ? Sentinel::void_complex : Sentinel::irrelevant;
        comment = true;
        break;
      }
      facet.emplace_back(t);
    }
    if (comment || facet.empty()) continue;
    if (sentinel != Sentinel::none) throw ParseError(line_no, "facet after a sentinel line");
    std::vector<VertexLabel> sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(line_no, "repeated vertex in facet");
    }
    facets.push_back(std::move(facet));
  }
  auto empty = std::make_shared<const std::vector<VertexLabel>>();
  switch (sentinel) {
    case Sentinel::void_complex:
      return SimplicialComplex::void_complex(empty, VertexSet{});
    case Sentinel::irrelevant:
      return SimplicialComplex::irrelevant(empty, VertexSet{});
    case Sentinel::none:
      break;
  }
  if (facets.empty()) throw ParseError(0, "no facets; use !void or !irrelevant for degenerate complexes");
  try {
    return SimplicialComplex::from_label_facets(facets);
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
}

SimplicialComplex parse_facet_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_facet_list(in);
}

void write_facet_list(std::ostream& out, const SimplicialComplex& c) {
  if (c.is_void()) {
    out << "!void\n";
    return;
  }
  if (c.is_irrelevant()) {
    out << "!irrelevant\n";
    return;
  }
  for (VertexSet f : c.facets()) {
    bool first = true;
    for (const auto& l : c.labels_of(f)) {
      out << (first ? "" : " ") << l;
      first = false;
    }
    out << '\n';
  }
}

}  // namespace cmg
