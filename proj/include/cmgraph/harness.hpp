#ifndef CMGRAPH_HARNESS_HPP
#define CMGRAPH_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cmgraph/complex.hpp"
#include "cmgraph/construction.hpp"
#include "cmgraph/graph.hpp"
#include "cmgraph/limits.hpp"

namespace cmg {

enum class Tri : std::uint8_t { no, yes, undecided };
inline Tri tri(bool b) { return b ? Tri::yes : Tri::no; }
Tri tri_and(Tri a, Tri b);

/// Evaluated conditions of one theorem instance, in the theorem's own numbering.
struct ConditionVector {
  std::vector<Tri> values;
  bool violation = false;

  /// "1" / "0" / "U" per condition.
  std::string bits() const;
  bool operator==(const ConditionVector&) const = default;
};

// ---- Single-instance checks -------------------------------------------------

/// Unmixedness of the attached graph vs. unmixedness of every part and of every
/// part minus its attachment vertex. Values: [attached unmixed, part condition].
/// Requires a base without isolated vertices.
ConditionVector check_unmixed_attachment(const AttachmentSpec& spec, const Limits& limits = {});

/// As above when base vertices 1..t (label order) are exactly the isolated ones;
/// parts on isolated vertices only need to be unmixed themselves.
ConditionVector check_unmixed_attachment_isolated(const AttachmentSpec& spec, int t, const Limits& limits = {});

/// Parts 1..m are cycles, the rest connected chordal graphs attached at a
/// neighbor of a simplicial vertex; the base has no isolated vertex.
/// Values: [unmixed, CM, unmixed+shellable, unmixed+VD, combinatorial].
/// Shellability past facet_cap is undecided; equivalence is asserted among decided values.
ConditionVector check_main1(const AttachmentSpec& spec, int m, Field field, std::size_t facet_cap,
                            const Limits& limits = {});
/// Same hypotheses. Values: [SCM, shellable, VD, every cycle is C3 or C5].
ConditionVector check_main2(const AttachmentSpec& spec, int m, Field field, std::size_t facet_cap,
                            const Limits& limits = {});

/// Cycles of the given lengths attached to `base`.
/// Values: [every length in {3,5}, VD, SCM, shellable].
ConditionVector check_cycle_corollary(const SimpleGraph& base, const std::vector<int>& sizes,
                                      Field field = Field::GF2, std::size_t facet_cap = Limits{}.facet_cap,
                                      const Limits& limits = {});

/// t copies of C4 joined in a path by single edges, with a whisker on every vertex.
/// Throws if the result is not decomposable or a 4-cycle does not survive as an induced cycle.
SimpleGraph build_tcycle_example(int t, const Limits& limits = {});
/// Vertex sets (indices) of the t base 4-cycles inside build_tcycle_example(t).
std::vector<std::vector<int>> tcycle_base_cycles(const SimpleGraph& example, int t);

// ---- Catalogs and enumeration ----------------------------------------------

enum class PartKind { cycle, chordal };

struct CatalogPart {
  std::string name;
  SimpleGraph graph;
  VertexLabel attach_at;
  PartKind kind;
};

/// K2, P2 at its middle, C3, C4, C5, C6, K3, K_{1,2} at its center.
std::vector<CatalogPart> default_catalog();
const CatalogPart& find_part(const std::vector<CatalogPart>& catalog, const std::string& name);

/// Isomorphism-invariant relabeling onto 1..n (n <= 11).
SimpleGraph canonical_form(const SimpleGraph& g);
/// One graph per isomorphism class on exactly n vertices (n <= 7), labels 1..n.
std::vector<SimpleGraph> graphs_up_to_iso(int n, bool connected_only, bool no_isolated);
/// Connected chordal graphs on 1..max_vertices vertices, one per isomorphism class.
std::vector<SimpleGraph> connected_chordal_graphs(int max_vertices);

struct Instance {
  SimpleGraph base;               // labels 1..n
  std::vector<std::size_t> parts; // catalog indices, one per base vertex
};

/// Every connected base with 2..max_base_vertices vertices (up to isomorphism)
/// with every assignment of catalog parts, in a fixed order.
std::vector<Instance> enumerate_instances(int max_base_vertices, const std::vector<CatalogPart>& catalog);
/// Seeded pseudorandom instances with connected bases on [min_base, max_base] vertices.
std::vector<Instance> sample_instances(std::uint64_t seed, std::size_t count, int min_base, int max_base,
                                       const std::vector<CatalogPart>& catalog);
/// Random labeled graph on n vertices, each edge present with probability permille/1000.
SimpleGraph random_graph(std::mt19937_64& rng, int n, int permille);

AttachmentSpec make_spec(const Instance& inst, const std::vector<CatalogPart>& catalog);
/// Relabels the base so that cycle parts come first; returns the spec and the cycle count m.
std::pair<AttachmentSpec, int> make_cycles_first_spec(const Instance& inst, const std::vector<CatalogPart>& catalog);

// ---- Theorem verification ---------------------------------------------------

enum class TheoremId { prop_vd, prop_unmixed, remark_isolated, prop_chordal_del, main1, main2, cor_cycles, remark_tcycles };
std::string to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(const std::string& name);
std::vector<TheoremId> all_theorems();

struct VerifyOptions {
  int max_base = 3;          // base vertices for attachment theorems
  int max_vertices = 6;      // graph size for prop_chordal_del
  int max_t = 3;             // remark_tcycles
  std::uint64_t seed = 1;
  std::size_t samples = 0;   // extra random instances (bases one size above max_base)
  Field field = Field::GF2;
  Limits limits;
};

struct Violation {
  std::size_t instance = 0;
  std::string serialization;
  ConditionVector conditions;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::prop_vd;
  std::size_t instances_checked = 0;
  std::size_t undecided = 0;  // instances with at least one undecided condition
  std::vector<Violation> violations;
};

/// Runs the sweep for one theorem. When `records` is set, writes one
/// "THEOREM <id> INSTANCE <n> CONDITIONS <bits> STATUS <ok|violation>" line per
/// instance and a final "SUMMARY ..." line.
TheoremReport verify_theorem(TheoremId id, const VerifyOptions& options, std::ostream* records = nullptr);

/// Re-evaluates a serialized instance from a report.
ConditionVector replay_instance(TheoremId id, const std::string& serialization, const VerifyOptions& options);

}  // namespace cmg

#endif
