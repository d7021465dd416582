#include "cmgraph/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cmgraph/chordal.hpp"
#include "cmgraph/decomposability.hpp"
#include "cmgraph/errors.hpp"
#include "cmgraph/independence.hpp"

namespace cmg {

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  if (a == Tri::undecided || b == Tri::undecided) return Tri::undecided;
  return Tri::yes;
}

std::string ConditionVector::bits() const {
  std::string out;
  for (Tri t : values) out += t == Tri::yes ? '1' : t == Tri::no ? '0' : 'U';
  return out;
}

namespace {

/// True iff every pair of decided values agrees.
bool decided_disagree(const std::vector<Tri>& values) {
  bool seen_yes = false;
  bool seen_no = false;
  for (Tri t : values) {
    seen_yes = seen_yes || t == Tri::yes;
    seen_no = seen_no || t == Tri::no;
  }
  return seen_yes && seen_no;
}

void require_no_isolated(const SimpleGraph& base) {
  for (int v = 0; v < base.order(); ++v) {
    if (base.degree(v) == 0) {
      throw PreconditionError("base vertex '" + base.label(v).str() +
                              "' is isolated; use the isolated-vertex variant");
    }
  }
}

bool part_minus_root_unmixed(const Part& p, const Limits& limits) {
  return is_unmixed(p.graph.induced(p.graph.all().without(p.graph.index_of(p.attach_at))), limits).holds;
}

bool is_cycle_graph(const SimpleGraph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

void check_main_hypotheses(const AttachmentSpec& spec, int m) {
  spec.validate();
  std::vector<std::string> issues;
  const int n = spec.base.order();
  for (int v = 0; v < n; ++v) {
    if (spec.base.degree(v) == 0) issues.push_back("base vertex '" + spec.base.label(v).str() + "' is isolated");
  }
  if (m < 0 || m > n) issues.push_back("cycle count m=" + std::to_string(m) + " is outside 0.." + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    const Part& p = spec.parts[static_cast<std::size_t>(i)];
    const std::string name = "part " + std::to_string(i + 1);
    if (i < m) {
      if (!is_cycle_graph(p.graph)) issues.push_back(name + " should be a cycle");
      continue;
    }
    if (!is_chordal(p.graph).holds) {
      issues.push_back(name + " is not chordal");
    } else if (!valid_attachment_points(p.graph).contains(p.graph.index_of(p.attach_at))) {
      issues.push_back(name + " is not attached at a neighbor of a simplicial vertex");
    }
  }
  if (!issues.empty()) {
    std::string msg = "hypotheses violated:";
    for (const auto& s : issues) msg += "\n  - " + s;
    throw PreconditionError(msg);
  }
}

Tri shellable_tri(const SimplicialComplex& c, std::size_t facet_cap) {
  try {
    return tri(is_shellable(c, facet_cap).holds);
  } catch (const CapExceeded&) {
    return Tri::undecided;
  }
}

bool cycles_are_3_or_5(const AttachmentSpec& spec, int m) {
  for (int i = 0; i < m; ++i) {
    const int len = spec.parts[static_cast<std::size_t>(i)].graph.order();
    if (len != 3 && len != 5) return false;
  }
  return true;
}

}  // namespace

ConditionVector check_unmixed_attachment(const AttachmentSpec& spec, const Limits& limits) {
  spec.validate();
  require_no_isolated(spec.base);
  return check_unmixed_attachment_isolated(spec, 0, limits);
}

ConditionVector check_unmixed_attachment_isolated(const AttachmentSpec& spec, int t, const Limits& limits) {
  spec.validate();
  const int n = spec.base.order();
  if (t < 0 || t > n) throw PreconditionError("t=" + std::to_string(t) + " is outside 0.." + std::to_string(n));
  for (int v = 0; v < n; ++v) {
    if ((spec.base.degree(v) == 0) != (v < t)) {
      throw PreconditionError("base vertices 1.." + std::to_string(t) + " must be exactly the isolated vertices");
    }
  }
  const bool attached = is_unmixed(attach(spec), limits).holds;
  bool parts = true;
  for (int i = 0; i < n && parts; ++i) {
    const Part& p = spec.parts[static_cast<std::size_t>(i)];
    parts = is_unmixed(p.graph, limits).holds && (i < t || part_minus_root_unmixed(p, limits));
  }
  ConditionVector cv;
  cv.values = {tri(attached), tri(parts)};
  cv.violation = attached != parts;
  return cv;
}

ConditionVector check_main1(const AttachmentSpec& spec, int m, Field field, std::size_t facet_cap, const Limits& limits) {
  check_main_hypotheses(spec, m);
  const SimpleGraph g = attach(spec);
  const SimplicialComplex delta = independence_complex(g, limits);
  const bool unmixed = is_pure(delta);
  const bool cm = is_cohen_macaulay(delta, field, limits).holds;
  const Tri shell = unmixed ? shellable_tri(delta, facet_cap) : Tri::no;
  const bool vd = unmixed && is_vertex_decomposable(g, limits).outcome;
  bool combinatorial = cycles_are_3_or_5(spec, m);
  for (std::size_t i = static_cast<std::size_t>(m); i < spec.parts.size() && combinatorial; ++i) {
    combinatorial = is_unmixed(spec.parts[i].graph, limits).holds;
  }
  ConditionVector cv;
  cv.values = {tri(unmixed), tri(cm), shell, tri(vd), tri(combinatorial)};
  cv.violation = decided_disagree(cv.values);
  return cv;
}

ConditionVector check_main2(const AttachmentSpec& spec, int m, Field field, std::size_t facet_cap, const Limits& limits) {
  check_main_hypotheses(spec, m);
  const SimpleGraph g = attach(spec);
  const SimplicialComplex delta = independence_complex(g, limits);
  ConditionVector cv;
  cv.values = {tri(is_sequentially_cohen_macaulay(delta, field, limits).holds), shellable_tri(delta, facet_cap),
               tri(is_vertex_decomposable(g, limits).outcome), tri(cycles_are_3_or_5(spec, m))};
  cv.violation = decided_disagree(cv.values);
  return cv;
}

ConditionVector check_cycle_corollary(const SimpleGraph& base, const std::vector<int>& sizes, Field field,
                                      std::size_t facet_cap, const Limits& limits) {
  if (sizes.size() != static_cast<std::size_t>(base.order())) {
    throw PreconditionError("need one cycle length per base vertex");
  }
  AttachmentSpec spec;
  spec.base = base;
  bool predicate = true;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 3) throw PreconditionError("cycle length must be at least 3");
    predicate = predicate && (sizes[i] == 3 || sizes[i] == 5);
    spec.parts.push_back(Part{prefix_labels(make_family(Family::cycle, sizes[i]), std::to_string(i + 1) + "."),
                              VertexLabel(std::to_string(i + 1) + ".1")});
  }
  const SimpleGraph g = attach(spec);
  const SimplicialComplex delta = independence_complex(g, limits);
  ConditionVector cv;
  cv.values = {tri(predicate), tri(is_vertex_decomposable(g, limits).outcome),
               tri(is_sequentially_cohen_macaulay(delta, field, limits).holds), shellable_tri(delta, facet_cap)};
  cv.violation = decided_disagree(cv.values);
  return cv;
}

SimpleGraph build_tcycle_example(int t, const Limits& limits) {
  if (t < 1) throw PreconditionError("t must be at least 1");
  if (static_cast<std::size_t>(8 * t) > limits.vertex_cap) {
    throw CapExceeded("vertex", limits.vertex_cap, static_cast<std::size_t>(8 * t));
  }
  std::vector<VertexLabel> vertices;
  std::vector<LabelEdge> edges;
  for (int c = 0; c < t; ++c) {
    const int b = 4 * c;
    for (int k = 1; k <= 4; ++k) {
      vertices.push_back(VertexLabel::number(b + k));
      edges.emplace_back(VertexLabel::number(b + k), VertexLabel::number(b + k % 4 + 1));
    }
    if (c + 1 < t) edges.emplace_back(VertexLabel::number(b + 3), VertexLabel::number(b + 5));
  }
  const SimpleGraph base = SimpleGraph::build(std::move(vertices), edges);
  const SimpleGraph g = attach_uniform(base, make_family(Family::complete, 2), VertexLabel("1"));

  if (!is_vertex_decomposable(g, limits).outcome) throw std::logic_error("t-cycle example is not decomposable");
  for (const auto& cycle : tcycle_base_cycles(g, t)) {
    if (!is_chordless_cycle(g, cycle)) throw std::logic_error("a base 4-cycle did not survive as an induced cycle");
  }
  return g;
}

std::vector<std::vector<int>> tcycle_base_cycles(const SimpleGraph& example, int t) {
  std::vector<std::vector<int>> out;
  for (int c = 0; c < t; ++c) {
    std::vector<int> cycle;
    for (int k = 1; k <= 4; ++k) cycle.push_back(example.index_of(VertexLabel::pair(4 * c + k, 1)));
    out.push_back(std::move(cycle));
  }
  return out;
}

// ---- Catalog ------------------------------------------------------------------

std::vector<CatalogPart> default_catalog() {
  const SimpleGraph star = SimpleGraph::build({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}});
  return {
      {"K2", make_family(Family::complete, 2), VertexLabel("1"), PartKind::chordal},
      {"P2m", make_family(Family::path, 2), VertexLabel("2"), PartKind::chordal},
      {"C3", make_family(Family::cycle, 3), VertexLabel("1"), PartKind::cycle},
      {"C4", make_family(Family::cycle, 4), VertexLabel("1"), PartKind::cycle},
      {"C5", make_family(Family::cycle, 5), VertexLabel("1"), PartKind::cycle},
      {"C6", make_family(Family::cycle, 6), VertexLabel("1"), PartKind::cycle},
      {"K3", make_family(Family::complete, 3), VertexLabel("1"), PartKind::chordal},
      {"K12c", star, VertexLabel("1"), PartKind::chordal},
  };
}

const CatalogPart& find_part(const std::vector<CatalogPart>& catalog, const std::string& name) {
  for (const auto& p : catalog) {
    if (p.name == name) return p;
  }
  throw PreconditionError("unknown catalog part '" + name + "'");
}

// ---- Canonical forms and graph enumeration -------------------------------------

namespace {

using Adjacency = std::vector<std::uint64_t>;

/// Stable color refinement; returns per-vertex colors numbered by sorted signature.
std::vector<int> refine_colors(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<int> color(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      std::vector<int> nb;
      for (std::uint64_t b = adj[v]; b != 0; b &= b - 1) nb.push_back(color[static_cast<std::size_t>(std::countr_zero(b))]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (const auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(n);
    for (const auto& [s, v] : sig) {
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), s) - keys.begin());
    }
    color.swap(next);
    if (keys.size() == classes) return color;
    classes = keys.size();
  }
}

struct CanonicalSearch {
  const Adjacency& adj;
  std::vector<int> cell_of_position;  // color required at each position
  std::vector<int> color;
  std::vector<int> placed;
  std::uint64_t best = 0;
  bool have_best = false;
  std::vector<int> best_order;
  int total_bits = 0;

  void search(std::uint64_t code, int bits_used) {
    const std::size_t pos = placed.size();
    if (pos == adj.size()) {
      if (!have_best || code > best) {
        best = code;
        best_order = placed;
        have_best = true;
      }
      return;
    }
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (color[v] != cell_of_position[pos]) continue;
      if (std::find(placed.begin(), placed.end(), static_cast<int>(v)) != placed.end()) continue;
      std::uint64_t next = code;
      for (int u : placed) next = (next << 1) | ((adj[v] >> u) & 1U);
      const int used = bits_used + static_cast<int>(pos);
      if (have_best && used > 0) {
        const std::uint64_t best_prefix = best >> (total_bits - used);
        if (next < best_prefix) continue;
      }
      placed.push_back(static_cast<int>(v));
      search(next, used);
      placed.pop_back();
    }
  }
};

std::pair<std::uint64_t, std::vector<int>> canonical_code(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  if (n > 11) throw PreconditionError("canonical form supports at most 11 vertices");
  CanonicalSearch s{adj, {}, refine_colors(adj), {}, 0, false, {}, n * (n - 1) / 2};
  s.cell_of_position = s.color;
  std::sort(s.cell_of_position.begin(), s.cell_of_position.end());
  s.search(0, 0);
  return {s.best, s.best_order};
}

Adjacency adjacency_of(const SimpleGraph& g) {
  Adjacency adj;
  for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v).bits());
  return adj;
}

SimpleGraph graph_from_adjacency(const Adjacency& adj, const std::vector<int>& order) {
  // order[p] = vertex placed at position p, which becomes label p + 1.
  std::vector<int> position(adj.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
  std::vector<VertexLabel> vertices;
  std::vector<LabelEdge> edges;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    vertices.push_back(VertexLabel::number(position[v] + 1));
    for (std::uint64_t b = adj[v]; b != 0; b &= b - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(b));
      if (u > v) edges.emplace_back(VertexLabel::number(position[v] + 1), VertexLabel::number(position[u] + 1));
    }
  }
  return SimpleGraph::build(std::move(vertices), edges);
}

bool adjacency_connected(const Adjacency& adj) {
  if (adj.empty()) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(b))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (adj.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj.size()) - 1);
}

}  // namespace

SimpleGraph canonical_form(const SimpleGraph& g) {
  const Adjacency adj = adjacency_of(g);
  return graph_from_adjacency(adj, canonical_code(adj).second);
}

std::vector<SimpleGraph> graphs_up_to_iso(int n, bool connected_only, bool no_isolated) {
  if (n < 0 || n > 7) throw PreconditionError("graph enumeration supports 0..7 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::map<std::uint64_t, SimpleGraph> classes;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Adjacency adj(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) {
        adj[static_cast<std::size_t>(pairs[k].first)] |= std::uint64_t{1} << pairs[k].second;
        adj[static_cast<std::size_t>(pairs[k].second)] |= std::uint64_t{1} << pairs[k].first;
      }
    }
    if (no_isolated && std::any_of(adj.begin(), adj.end(), [](std::uint64_t a) { return a == 0; })) continue;
    if (connected_only && !adjacency_connected(adj)) continue;
    auto [code, order] = canonical_code(adj);
    if (!classes.contains(code)) classes.emplace(code, graph_from_adjacency(adj, order));
  }
  std::vector<SimpleGraph> out;
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  // Fewer edges first, then by canonical code, for a stable and readable order.
  std::stable_sort(out.begin(), out.end(), [](const SimpleGraph& a, const SimpleGraph& b) { return a.edge_count() < b.edge_count(); });
  return out;
}

std::vector<SimpleGraph> connected_chordal_graphs(int max_vertices) {
  if (max_vertices > 11) throw PreconditionError("chordal enumeration supports at most 11 vertices");
  std::vector<SimpleGraph> out;
  if (max_vertices < 1) return out;
  std::vector<Adjacency> level{Adjacency{0}};
  out.push_back(graph_from_adjacency(level.front(), {0}));
  for (int n = 2; n <= max_vertices; ++n) {
    std::map<std::uint64_t, std::pair<Adjacency, std::vector<int>>> next;
    for (const Adjacency& adj : level) {
      const int m = n - 1;
      // A new simplicial vertex joined to a nonempty clique keeps the graph connected and chordal.
      for (std::uint64_t clique = 1; clique < (std::uint64_t{1} << m); ++clique) {
        bool is_clique = true;
        for (std::uint64_t b = clique; b != 0 && is_clique; b &= b - 1) {
          const int v = std::countr_zero(b);
          is_clique = ((clique & ~(std::uint64_t{1} << v)) & ~adj[static_cast<std::size_t>(v)]) == 0;
        }
        if (!is_clique) continue;
        Adjacency grown = adj;
        grown.push_back(clique);
        for (std::uint64_t b = clique; b != 0; b &= b - 1) grown[static_cast<std::size_t>(std::countr_zero(b))] |= std::uint64_t{1} << m;
        auto [code, order] = canonical_code(grown);
        if (!next.contains(code)) next.emplace(code, std::make_pair(std::move(grown), std::move(order)));
      }
    }
    level.clear();
    for (auto& [code, entry] : next) {
      out.push_back(graph_from_adjacency(entry.first, entry.second));
      level.push_back(std::move(entry.first));
    }
  }
  return out;
}

// ---- Instances -------------------------------------------------------------------

std::vector<Instance> enumerate_instances(int max_base_vertices, const std::vector<CatalogPart>& catalog) {
  std::vector<Instance> out;
  if (catalog.empty()) return out;
  for (int n = 2; n <= max_base_vertices; ++n) {
    for (const SimpleGraph& base : graphs_up_to_iso(n, true, true)) {
      std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
      while (true) {
        out.push_back(Instance{base, choice});
        std::size_t k = choice.size();
        while (k > 0) {
          --k;
          if (++choice[k] < catalog.size()) break;
          choice[k] = 0;
          if (k == 0) {
            k = choice.size() + 1;  // odometer wrapped
            break;
          }
        }
        if (k == choice.size() + 1) break;
      }
    }
  }
  return out;
}

SimpleGraph random_graph(std::mt19937_64& rng, int n, int permille) {
  std::vector<VertexLabel> vertices;
  std::vector<LabelEdge> edges;
  for (int i = 1; i <= n; ++i) vertices.push_back(VertexLabel::number(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (static_cast<int>(rng() % 1000) < permille) edges.emplace_back(VertexLabel::number(i), VertexLabel::number(j));
    }
  }
  return SimpleGraph::build(std::move(vertices), edges);
}

std::vector<Instance> sample_instances(std::uint64_t seed, std::size_t count, int min_base, int max_base,
                                       const std::vector<CatalogPart>& catalog) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  if (catalog.empty() || max_base < 2) return out;
  min_base = std::max(min_base, 2);
  while (out.size() < count) {
    const int n = min_base + static_cast<int>(rng() % static_cast<std::uint64_t>(max_base - min_base + 1));
    SimpleGraph base = random_graph(rng, n, 500);
    if (!is_connected(base)) continue;
    Instance inst{std::move(base), {}};
    for (int i = 0; i < n; ++i) inst.parts.push_back(static_cast<std::size_t>(rng() % catalog.size()));
    out.push_back(std::move(inst));
  }
  return out;
}

AttachmentSpec make_spec(const Instance& inst, const std::vector<CatalogPart>& catalog) {
  AttachmentSpec spec;
  spec.base = inst.base;
  for (std::size_t i = 0; i < inst.parts.size(); ++i) {
    const CatalogPart& p = catalog.at(inst.parts[i]);
    const std::string prefix = std::to_string(i + 1) + ".";
    spec.parts.push_back(Part{prefix_labels(p.graph, prefix), VertexLabel(prefix + p.attach_at.str())});
  }
  return spec;
}

std::pair<AttachmentSpec, int> make_cycles_first_spec(const Instance& inst, const std::vector<CatalogPart>& catalog) {
  const int n = inst.base.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(), [&](int v) {
    return catalog.at(inst.parts[static_cast<std::size_t>(v)]).kind == PartKind::cycle;
  });
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) position[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;

  Instance reordered;
  std::vector<VertexLabel> vertices;
  std::vector<LabelEdge> edges;
  for (int p = 1; p <= n; ++p) vertices.push_back(VertexLabel::number(p));
  for (const auto& [u, v] : inst.base.edges()) {
    edges.emplace_back(VertexLabel::number(position[static_cast<std::size_t>(u)] + 1),
                       VertexLabel::number(position[static_cast<std::size_t>(v)] + 1));
  }
  reordered.base = SimpleGraph::build(std::move(vertices), edges);
  int m = 0;
  for (int p = 0; p < n; ++p) {
    const std::size_t part = inst.parts[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
    reordered.parts.push_back(part);
    if (catalog.at(part).kind == PartKind::cycle) ++m;
  }
  return {make_spec(reordered, catalog), m};
}

// ---- Theorem sweeps ----------------------------------------------------------------

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::prop_vd: return "prop_vd";
    case TheoremId::prop_unmixed: return "prop_unmixed";
    case TheoremId::remark_isolated: return "remark_isolated";
    case TheoremId::prop_chordal_del: return "prop_chordal_del";
    case TheoremId::main1: return "main1";
    case TheoremId::main2: return "main2";
    case TheoremId::cor_cycles: return "cor_cycles";
    case TheoremId::remark_tcycles: return "remark_tcycles";
  }
  return "?";
}

std::vector<TheoremId> all_theorems() {
  return {TheoremId::prop_vd, TheoremId::prop_unmixed, TheoremId::remark_isolated, TheoremId::prop_chordal_del,
          TheoremId::main1,   TheoremId::main2,        TheoremId::cor_cycles,      TheoremId::remark_tcycles};
}

std::optional<TheoremId> parse_theorem_id(const std::string& name) {
  for (TheoremId id : all_theorems()) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

namespace {

std::string serialize_graph(const SimpleGraph& g) {
  std::string out = "n=" + std::to_string(g.order()) + " e=";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out += (first ? "" : ",") + g.label(u).str() + "-" + g.label(v).str();
    first = false;
  }
  return out;
}

std::string serialize_instance(const Instance& inst, const std::vector<CatalogPart>& catalog) {
  std::string out = serialize_graph(inst.base) + " parts=";
  for (std::size_t i = 0; i < inst.parts.size(); ++i) out += (i ? "," : "") + catalog.at(inst.parts[i]).name;
  return out;
}

std::map<std::string, std::string> fields_of(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream ss(text);
  for (std::string tok; ss >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(0, "malformed instance field '" + tok + "'");
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

SimpleGraph graph_from_fields(const std::map<std::string, std::string>& f) {
  const int n = std::stoi(f.at("n"));
  std::vector<VertexLabel> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back(VertexLabel::number(i));
  std::vector<LabelEdge> edges;
  for (const auto& e : split(f.count("e") ? f.at("e") : "", ',')) {
    const auto dash = e.find('-');
    edges.emplace_back(VertexLabel(e.substr(0, dash)), VertexLabel(e.substr(dash + 1)));
  }
  return SimpleGraph::build(std::move(vertices), edges);
}

Instance instance_from_fields(const std::map<std::string, std::string>& f, const std::vector<CatalogPart>& catalog) {
  Instance inst{graph_from_fields(f), {}};
  for (const auto& name : split(f.at("parts"), ',')) {
    const CatalogPart& p = find_part(catalog, name);
    inst.parts.push_back(static_cast<std::size_t>(&p - catalog.data()));
  }
  return inst;
}

int leading_isolated(const SimpleGraph& base) {
  int t = 0;
  while (t < base.order() && base.degree(t) == 0) ++t;
  return t;
}

struct Job {
  std::string serialization;
  std::function<ConditionVector()> run;
};

std::vector<Job> jobs_for(TheoremId id, const VerifyOptions& opt, const std::vector<CatalogPart>& catalog) {
  std::vector<Job> jobs;
  const auto instances = [&] {
    auto all = enumerate_instances(opt.max_base, catalog);
    auto extra = sample_instances(opt.seed, opt.samples, opt.max_base + 1, opt.max_base + 1, catalog);
    all.insert(all.end(), extra.begin(), extra.end());
    return all;
  };
  switch (id) {
    case TheoremId::prop_vd:
    case TheoremId::prop_unmixed:
    case TheoremId::main1:
    case TheoremId::main2:
      for (const Instance& inst : instances()) {
        jobs.push_back({serialize_instance(inst, catalog), [id, inst, &opt, &catalog] {
                          return replay_instance(id, serialize_instance(inst, catalog), opt);
                        }});
      }
      break;
    case TheoremId::remark_isolated:
      for (int n = 1; n <= opt.max_base; ++n) {
        for (int t = 1; t <= n; ++t) {
          const int k = n - t;
          if (k == 1) continue;  // the non-isolated remainder needs >= 2 vertices or none
          for (const SimpleGraph& rest : graphs_up_to_iso(k, false, true)) {
            std::vector<VertexLabel> vertices;
            std::vector<LabelEdge> edges;
            for (int i = 1; i <= n; ++i) vertices.push_back(VertexLabel::number(i));
            for (const auto& [u, v] : rest.edges()) edges.emplace_back(VertexLabel::number(u + t + 1), VertexLabel::number(v + t + 1));
            const SimpleGraph base = SimpleGraph::build(std::move(vertices), edges);
            std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
            while (true) {
              const std::string s = serialize_instance(Instance{base, choice}, catalog);
              jobs.push_back({s, [id, s, &opt] { return replay_instance(id, s, opt); }});
              std::size_t pos = 0;
              while (pos < choice.size() && ++choice[pos] == catalog.size()) choice[pos++] = 0;
              if (pos == choice.size()) break;
            }
          }
        }
      }
      break;
    case TheoremId::cor_cycles: {
      const std::vector<int> lengths{3, 4, 5, 6};
      for (int n = 2; n <= opt.max_base; ++n) {
        for (const SimpleGraph& base : graphs_up_to_iso(n, true, true)) {
          std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
          while (true) {
            std::string s = serialize_graph(base) + " cycles=";
            for (std::size_t i = 0; i < choice.size(); ++i) s += (i ? "," : "") + std::to_string(lengths[choice[i]]);
            jobs.push_back({s, [id, s, &opt] { return replay_instance(id, s, opt); }});
            std::size_t pos = 0;
            while (pos < choice.size() && ++choice[pos] == lengths.size()) choice[pos++] = 0;
            if (pos == choice.size()) break;
          }
        }
      }
      break;
    }
    case TheoremId::prop_chordal_del:
      for (const SimpleGraph& g : connected_chordal_graphs(opt.max_vertices)) {
        if (g.order() < 2 || !is_unmixed(g, opt.limits).holds) continue;
        const std::string s = serialize_graph(g);
        jobs.push_back({s, [id, s, &opt] { return replay_instance(id, s, opt); }});
      }
      break;
    case TheoremId::remark_tcycles:
      for (int t = 1; t <= opt.max_t; ++t) {
        const std::string s = "t=" + std::to_string(t);
        jobs.push_back({s, [id, s, &opt] { return replay_instance(id, s, opt); }});
      }
      break;
  }
  return jobs;
}

}  // namespace

ConditionVector replay_instance(TheoremId id, const std::string& serialization, const VerifyOptions& opt) {
  static const std::vector<CatalogPart> catalog = default_catalog();
  const auto f = fields_of(serialization);
  ConditionVector cv;
  switch (id) {
    case TheoremId::prop_vd: {
      const AttachmentVdReport r = check_attachment_vd(make_spec(instance_from_fields(f, catalog), catalog), opt.limits);
      cv.values = {tri(r.parts_vd), tri(r.attachments_shedding), tri(r.attached_vd)};
      cv.violation = !r.violations.empty();
      return cv;
    }
    case TheoremId::prop_unmixed:
      return check_unmixed_attachment(make_spec(instance_from_fields(f, catalog), catalog), opt.limits);
    case TheoremId::remark_isolated: {
      const Instance inst = instance_from_fields(f, catalog);
      return check_unmixed_attachment_isolated(make_spec(inst, catalog), leading_isolated(inst.base), opt.limits);
    }
    case TheoremId::main1:
    case TheoremId::main2: {
      const auto [spec, m] = make_cycles_first_spec(instance_from_fields(f, catalog), catalog);
      return id == TheoremId::main1 ? check_main1(spec, m, opt.field, opt.limits.facet_cap, opt.limits)
                                    : check_main2(spec, m, opt.field, opt.limits.facet_cap, opt.limits);
    }
    case TheoremId::cor_cycles: {
      std::vector<int> sizes;
      for (const auto& s : split(f.at("cycles"), ',')) sizes.push_back(std::stoi(s));
      return check_cycle_corollary(graph_from_fields(f), sizes, opt.field, opt.limits.facet_cap, opt.limits);
    }
    case TheoremId::prop_chordal_del: {
      const SimpleGraph g = graph_from_fields(f);
      const ChordalDeletionReport r = check_chordal_deletion_unmixed(g, opt.limits);
      cv.values = {tri(is_chordal(g).holds), tri(is_unmixed(g, opt.limits).holds), tri(r.violations.empty())};
      cv.violation = !r.violations.empty();
      return cv;
    }
    case TheoremId::remark_tcycles: {
      const int t = std::stoi(f.at("t"));
      bool built = true;
      try {
        (void)build_tcycle_example(t, opt.limits);
      } catch (const std::logic_error&) {
        built = false;
      }
      cv.values = {tri(built)};
      cv.violation = !built;
      return cv;
    }
  }
  return cv;
}

TheoremReport verify_theorem(TheoremId id, const VerifyOptions& options, std::ostream* records) {
  const std::vector<CatalogPart> catalog = default_catalog();
  TheoremReport report;
  report.theorem = id;
  const auto jobs = jobs_for(id, options, catalog);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    ConditionVector cv;
    try {
      cv = jobs[i].run();
    } catch (const CapExceeded&) {
      cv.values = {Tri::undecided};
    }
    ++report.instances_checked;
    if (std::find(cv.values.begin(), cv.values.end(), Tri::undecided) != cv.values.end()) ++report.undecided;
    if (cv.violation) report.violations.push_back({i, jobs[i].serialization, cv});
    if (records != nullptr) {
      *records << "THEOREM " << to_string(id) << " INSTANCE " << i << " CONDITIONS " << cv.bits() << " STATUS "
               << (cv.violation ? "violation" : "ok") << '\n';
    }
  }
  if (records != nullptr) {
    *records << "SUMMARY THEOREM " << to_string(id) << " INSTANCES " << report.instances_checked << " UNDECIDED "
             << report.undecided << " VIOLATIONS " << report.violations.size() << '\n';
  }
  return report;
}

}  // namespace cmg
