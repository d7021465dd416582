#include <doctest.h>

#include <random>

#include "cmgraph/construction.hpp"
#include "cmgraph/errors.hpp"
#include "cmgraph/harness.hpp"

using namespace cmg;

namespace {

SimpleGraph c4() { return make_family(Family::cycle, 4); }

}  // namespace

TEST_CASE("attached sizes") {
  SUBCASE("whiskered C4") {
    const auto g = attach_uniform(c4(), make_family(Family::complete, 2), "1");
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 8);
    CHECK(g == attach_uniform(c4(), make_family(Family::complete, 2), "2"));
  }
  SUBCASE("C4 with P2 at an end") {
    const auto g = attach_uniform(c4(), make_family(Family::path, 2), "1");
    CHECK(g.order() == 12);
    CHECK(g.edge_count() == 12);
  }
  SUBCASE("C4 with C4 parts") {
    const auto g = attach_uniform(c4(), c4(), "1");
    CHECK(g.order() == 16);
    CHECK(g.edge_count() == 20);
  }
  SUBCASE("K2 with C5 parts") {
    const auto g = attach_uniform(make_family(Family::complete, 2), make_family(Family::cycle, 5), "3");
    CHECK(g.order() == 10);
    CHECK(g.edge_count() == 11);
  }
}

TEST_CASE("attachment vertex becomes i.1") {
  // Part 1 is the path 1-2-3 attached at its middle: the middle becomes 1.1,
  // the ends keep their relative order as 1.2 and 1.3.
  AttachmentSpec spec;
  spec.base = make_family(Family::complete, 2);
  spec.parts = {Part{prefix_labels(make_family(Family::path, 2), "p"), "p2"},
                Part{prefix_labels(make_family(Family::complete, 2), "q"), "q2"}};
  const auto g = attach(spec);
  CHECK(g.labels() == std::vector<VertexLabel>{"1.1", "1.2", "1.3", "2.1", "2.2"});
  CHECK(g.adjacent(g.index_of("1.1"), g.index_of("2.1")));
  CHECK(g.degree(g.index_of("1.1")) == 3);
  CHECK(g.degree(g.index_of("1.2")) == 1);
  CHECK(attachment_vertices(g, 2) == g.set_of({"1.1", "2.1"}));
  CHECK(part_vertices(g, 1) == g.set_of({"1.1", "1.2", "1.3"}));
}

TEST_CASE("spec validation") {
  AttachmentSpec spec;
  spec.base = make_family(Family::complete, 2);
  const auto k2 = [](const std::string& p) { return prefix_labels(make_family(Family::complete, 2), p); };

  spec.parts = {Part{k2("a"), "a1"}};
  CHECK_THROWS_AS(spec.validate(), PreconditionError);

  spec.parts = {Part{k2("a"), "a1"}, Part{SimpleGraph::build({"b1"}, {}), "b1"}};
  CHECK_THROWS_WITH_AS(spec.validate(), doctest::Contains("part 2"), PreconditionError);

  spec.parts = {Part{SimpleGraph::build({"a1", "a2", "a3"}, {{"a1", "a2"}}), "a1"}, Part{k2("b"), "b1"}};
  CHECK_THROWS_WITH_AS(spec.validate(), doctest::Contains("part 1"), PreconditionError);

  spec.parts = {Part{k2("a"), "a1"}, Part{k2("b"), "zz"}};
  CHECK_THROWS_AS(spec.validate(), PreconditionError);

  spec.parts = {Part{k2("a"), "a1"}, Part{k2("a"), "a1"}};
  CHECK_THROWS_AS(spec.validate(), PreconditionError);

  spec.parts = {Part{k2("a"), "a1"}, Part{k2("b"), "b1"}};
  CHECK_NOTHROW(spec.validate());
}

TEST_CASE("base may have isolated vertices") {
  const auto base = SimpleGraph::build({"1", "2", "3"}, {{"2", "3"}});
  const auto g = attach_uniform(base, c4(), "1");
  CHECK(g.order() == 12);
  CHECK(g.edge_count() == 13);
}

TEST_CASE("random specs: additivity and recovery") {
  const auto catalog = default_catalog();
  for (const auto& inst : sample_instances(5, 150, 2, 6, catalog)) {
    const auto spec = make_spec(inst, catalog);
    const auto g = attach(spec);
    std::size_t edges = spec.base.edge_count();
    int vertices = 0;
    for (const auto& p : spec.parts) {
      edges += p.graph.edge_count();
      vertices += p.graph.order();
    }
    CHECK(g.edge_count() == edges);
    CHECK(g.order() == vertices);
    CHECK(attach(spec) == g);

    const int n = spec.base.order();
    const auto roots = g.induced(attachment_vertices(g, n));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) CHECK(roots.adjacent(u, v) == spec.base.adjacent(u, v));
    }
    for (int i = 1; i <= n; ++i) {
      const auto part = g.induced(part_vertices(g, i));
      const auto& original = spec.parts[static_cast<std::size_t>(i - 1)];
      CHECK(part.order() == original.graph.order());
      CHECK(part.edge_count() == original.graph.edge_count());
      CHECK(part.degree(0) == original.graph.degree(original.graph.index_of(original.attach_at)));
    }
  }
}

TEST_CASE("spec text format") {
  const std::string text =
      "base:\n1 2\n2 3\n3 4\n4 1\n"
      "part 1 attach a:\na b\n"
      "part 2 attach b:\na b\n"
      "part 3 attach x:\nx y\ny z\n"
      "part 4 attach c:\na b\nb c\nc d\nd a\n";
  const auto spec = parse_attachment_spec_string(text);
  REQUIRE(spec.parts.size() == 4);
  const auto g = attach(spec);
  CHECK(g.order() == 2 + 2 + 3 + 4);
  CHECK(g.edge_count() == 4 + 1 + 1 + 2 + 4);
  CHECK(g.degree(g.index_of("3.1")) == 3);

  CHECK_THROWS_AS(parse_attachment_spec_string("base:\n1 2\npart 1 attach a:\na b\n"), PreconditionError);
  CHECK_THROWS_AS(parse_attachment_spec_string("1 2\n"), ParseError);
  try {
    parse_attachment_spec_string("base:\n1 2\npart 1 attach a:\na b\npart 2 attach a:\na a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
  }
}
