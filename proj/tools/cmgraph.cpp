// cmgraph: command-line front end.
//
//   cmgraph check <input> --property {unmixed,vd,shellable,cm,scm,chordal}
//   cmgraph attach <spec> [--out <file>]
//   cmgraph attach --base <file> --parts <file> [--out <file>]
//   cmgraph verify <theorem> [--max-base N] [--seed N] [--samples N] ...
//
// Exit codes: 0 holds / no violations, 1 fails / violations, 2 input error,
// 3 undecided (a cap was exceeded).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cmgraph/chordal.hpp"
#include "cmgraph/complex.hpp"
#include "cmgraph/construction.hpp"
#include "cmgraph/decomposability.hpp"
#include "cmgraph/errors.hpp"
#include "cmgraph/graph_io.hpp"
#include "cmgraph/harness.hpp"
#include "cmgraph/independence.hpp"

namespace {

using namespace cmg;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;
constexpr int kUndecided = 3;

const std::map<std::string, Field> kFields{{"gf2", Field::GF2}, {"q", Field::Q}};

struct CapOptions {
  Field field = Field::GF2;
  std::size_t vertex_cap = Limits{}.vertex_cap;
  std::size_t facet_cap = Limits{}.facet_cap;

  Limits limits() const {
    Limits l;
    l.vertex_cap = vertex_cap;
    l.facet_cap = facet_cap;
    return l;
  }
};

void add_cap_options(CLI::App* cmd, CapOptions& caps) {
  cmd->add_option("--field", caps.field, "Coefficient field for homology: gf2 or q")
      ->transform(CLI::CheckedTransformer(kFields, CLI::ignore_case))
      ->default_str("gf2");
  cmd->add_option("--vertex-cap", caps.vertex_cap, "Largest graph handled")->capture_default_str();
  cmd->add_option("--facet-cap", caps.facet_cap, "Largest facet count for the shellability search")
      ->capture_default_str();
}

std::string face_text(const SimplicialComplex& c, VertexSet face) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : c.labels_of(face)) {
    out += (first ? "" : ",") + l.str();
    first = false;
  }
  return out + "}";
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

std::string sequence_text(const SimpleGraph& g, const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) out += (out.empty() ? "" : " ") + g.label(v).str();
  return out;
}

struct Outcome {
  bool holds = false;
  std::string certificate;
};

Outcome complex_property(const std::string& property, const SimplicialComplex& c, const CapOptions& caps) {
  std::ostringstream cert;
  const Limits limits = caps.limits();
  if (property == "unmixed") {
    const bool pure = is_pure(c);
    cert << (pure ? "pure" : "not pure") << ", facet sizes";
    std::set<int> sizes;
    for (VertexSet f : c.facets()) sizes.insert(f.size());
    for (int s : sizes) cert << ' ' << s;
    cert << '\n';
    return {pure, cert.str()};
  }
  if (property == "vd") {
    const auto v = is_vd_complex(c, limits);
    cert << (v.holds ? "vertex decomposable\n" : "no shedding sequence exists\n");
    return {v.holds, cert.str()};
  }
  if (property == "shellable") {
    const auto v = is_shellable(c, caps.facet_cap);
    if (v.holds) {
      cert << "shelling order:\n";
      for (VertexSet f : v.order) cert << "  " << face_text(c, f) << '\n';
    } else {
      cert << "no shelling order of the " << c.facet_count() << " facets\n";
    }
    return {v.holds, cert.str()};
  }
  if (property == "cm") {
    const auto v = is_cohen_macaulay(c, caps.field, limits);
    cert << "field " << to_string(v.field) << '\n';
    if (!v.holds) {
      cert << "link of " << face_text(c, v.witness_face) << " has reduced homology in dimension " << v.witness_dim
           << '\n';
    }
    return {v.holds, cert.str()};
  }
  if (property == "scm") {
    const auto v = is_sequentially_cohen_macaulay(c, caps.field, limits);
    cert << "field " << to_string(v.field) << '\n';
    if (!v.holds) {
      cert << "pure " << v.skeleton_dim << "-skeleton is not Cohen-Macaulay: link of "
           << face_text(c, v.skeleton_witness.witness_face) << " has reduced homology in dimension "
           << v.skeleton_witness.witness_dim << '\n';
    }
    return {v.holds, cert.str()};
  }
  throw PreconditionError("property '" + property + "' needs a graph, not a complex");
}

Outcome graph_property(const std::string& property, const SimpleGraph& g, const CapOptions& caps) {
  std::ostringstream cert;
  const Limits limits = caps.limits();
  if (property == "unmixed") {
    const auto v = is_unmixed(g, limits);
    if (v.holds) {
      cert << "every maximal independent set has size " << v.alpha << '\n';
    } else {
      cert << "smallest " << set_text(g, v.witness->first) << " size " << v.witness->first.size() << '\n'
           << "largest " << set_text(g, v.witness->second) << " size " << v.witness->second.size() << '\n';
    }
    return {v.holds, cert.str()};
  }
  if (property == "vd") {
    const auto v = is_vertex_decomposable(g, limits);
    return {v.outcome, format_certificate(g, v)};
  }
  if (property == "chordal") {
    const auto v = is_chordal(g);
    if (v.holds) {
      cert << "perfect elimination order: " << sequence_text(g, v.elimination_order) << '\n';
    } else {
      cert << "chordless cycle: " << sequence_text(g, v.chordless_cycle) << '\n';
    }
    return {v.holds, cert.str()};
  }
  return complex_property(property, independence_complex(g, limits), caps);
}

int run_check(const std::string& input, const std::string& property, bool complex_input, const CapOptions& caps) {
  Outcome outcome;
  try {
    if (complex_input) {
      std::ifstream in(input);
      if (!in) throw ParseError(0, "cannot open '" + input + "'");
      outcome = complex_property(property, parse_facet_list(in), caps);
    } else {
      outcome = graph_property(property, read_edge_list_file(input), caps);
    }
  } catch (const CapExceeded& e) {
    std::cout << "PROPERTY " << property << " RESULT undecided\n" << e.what() << '\n';
    return kUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  std::cout << "PROPERTY " << property << " RESULT " << (outcome.holds ? "true" : "false") << '\n'
            << outcome.certificate;
  return outcome.holds ? kHolds : kFails;
}

int run_attach(const std::string& spec_path, const std::string& base_path, const std::string& parts_path,
               const std::string& out_path) {
  try {
    AttachmentSpec spec;
    if (!spec_path.empty()) {
      std::ifstream in(spec_path);
      if (!in) throw ParseError(0, "cannot open '" + spec_path + "'");
      spec = parse_attachment_spec(in);
    } else {
      if (base_path.empty() || parts_path.empty()) throw PreconditionError("give a spec file or both --base and --parts");
      std::ifstream in(parts_path);
      if (!in) throw ParseError(0, "cannot open '" + parts_path + "'");
      spec = parse_parts(in, read_edge_list_file(base_path));
    }
    const SimpleGraph g = attach(spec);
    if (out_path.empty()) {
      write_edge_list(std::cout, g);
    } else {
      std::ofstream out(out_path);
      if (!out) throw PreconditionError("cannot write '" + out_path + "'");
      write_edge_list(out, g);
    }
    std::cerr << g.order() << " vertices, " << g.edge_count() << " edges\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int run_verify(const std::string& theorem, VerifyOptions options, const CapOptions& caps) {
  const auto id = parse_theorem_id(theorem);
  if (!id) {
    std::cerr << "error: unknown theorem '" << theorem << "'; known:";
    for (TheoremId t : all_theorems()) std::cerr << ' ' << to_string(t);
    std::cerr << '\n';
    return kInputError;
  }
  options.field = caps.field;
  options.limits = caps.limits();
  try {
    const auto report = verify_theorem(*id, options, &std::cout);
    for (const auto& v : report.violations) {
      std::cerr << "violation at instance " << v.instance << ": " << v.serialization << " conditions "
                << v.conditions.bits() << '\n';
    }
    return report.violations.empty() ? 0 : kFails;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence complexes of graphs: construction, property checks and theorem sweeps"};
  app.require_subcommand(1);
  app.footer(
      "Graph input is an edge list: one edge per line as two labels, '# ...' comments,\n"
      "'vertex <label>' for isolated vertices. Attached graphs use labels i.j, where\n"
      "i.1 is the attachment vertex of part i.");

  CapOptions caps;
  std::string input;
  std::string property;
  bool complex_input = false;
  auto* check = app.add_subcommand("check", "Decide one property of a graph or complex");
  check->add_option("input", input, "Edge-list file (facet list with --complex)")->required();
  check->add_option("--property", property, "Property to decide")
      ->required()
      ->check(CLI::IsMember({"unmixed", "vd", "shellable", "cm", "scm", "chordal"}));
  check->add_flag("--complex", complex_input, "Read a facet list instead of a graph");
  add_cap_options(check, caps);

  std::string spec_path;
  std::string base_path;
  std::string parts_path;
  std::string out_path;
  auto* attach_cmd = app.add_subcommand("attach", "Build an attached graph from a spec");
  attach_cmd->add_option("spec", spec_path, "Spec file with base: and part sections");
  attach_cmd->add_option("--base", base_path, "Base graph edge list");
  attach_cmd->add_option("--parts", parts_path, "File holding only the part sections");
  attach_cmd->add_option("--out", out_path, "Output file (default stdout)");

  std::string theorem;
  VerifyOptions options;
  auto* verify = app.add_subcommand("verify", "Sweep one theorem over enumerated instances");
  verify->add_option("theorem", theorem, "prop_vd, prop_unmixed, remark_isolated, prop_chordal_del, main1, "
                                         "main2, cor_cycles or remark_tcycles")
      ->required();
  verify->add_option("--max-base", options.max_base, "Largest base graph")->capture_default_str();
  verify->add_option("--max-vertices", options.max_vertices, "Largest chordal graph for prop_chordal_del")
      ->capture_default_str();
  verify->add_option("--max-t", options.max_t, "Largest t for remark_tcycles")->capture_default_str();
  verify->add_option("--seed", options.seed, "Seed for sampled instances")->capture_default_str();
  verify->add_option("--samples", options.samples, "Extra sampled instances one size above --max-base")
      ->capture_default_str();
  add_cap_options(verify, caps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  if (check->parsed()) return run_check(input, property, complex_input, caps);
  if (attach_cmd->parsed()) return run_attach(spec_path, base_path, parts_path, out_path);
  return run_verify(theorem, options, caps);
}
