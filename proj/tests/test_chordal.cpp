#include <doctest.h>

#include <random>

#include "cmgraph/chordal.hpp"
#include "cmgraph/decomposability.hpp"
#include "cmgraph/errors.hpp"
#include "cmgraph/harness.hpp"
#include "cmgraph/independence.hpp"
#include "oracles.hpp"

using namespace cmg;

TEST_CASE("recognition") {
  const auto c4 = make_family(Family::cycle, 4);
  const auto verdict = is_chordal(c4);
  CHECK_FALSE(verdict.holds);
  CHECK(verdict.chordless_cycle.size() == 4);
  CHECK(is_chordless_cycle(c4, verdict.chordless_cycle));

  const auto tree = SimpleGraph::build({"1", "2", "3", "4", "5", "6"},
                                       {{"1", "2"}, {"1", "3"}, {"3", "4"}, {"3", "5"}, {"5", "6"}});
  CHECK(is_chordal(tree).holds);

  const auto chord = SimpleGraph::build({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"1", "3"}});
  const auto ok = is_chordal(chord);
  CHECK(ok.holds);
  CHECK(is_perfect_elimination_order(chord, ok.elimination_order));
}

TEST_CASE("simplicial vertices") {
  const auto p2 = make_family(Family::path, 2);
  CHECK(simplicial_vertices(p2) == p2.set_of({"1", "3"}));
  const auto k5 = make_family(Family::complete, 5);
  CHECK(simplicial_vertices(k5) == k5.all());
  CHECK(simplicial_vertices(make_family(Family::cycle, 4)).empty());
}

TEST_CASE("attachment points") {
  const auto k2 = make_family(Family::complete, 2);
  CHECK(valid_attachment_points(k2) == k2.all());
  const auto p2 = make_family(Family::path, 2);
  CHECK(valid_attachment_points(p2) == p2.set_of({"2"}));
  const auto star = SimpleGraph::build({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
  CHECK(valid_attachment_points(star) == star.set_of({"c"}));
  CHECK_THROWS_AS(valid_attachment_points(make_family(Family::cycle, 4)), PreconditionError);
  CHECK_THROWS_AS(valid_attachment_points(SimpleGraph::build({"a"}, {})), PreconditionError);
}

TEST_CASE("deleting a neighbor of a simplicial vertex") {
  const auto k2 = make_family(Family::complete, 2);
  const auto report = check_chordal_deletion_unmixed(k2);
  CHECK(report.pairs_checked == 2);
  CHECK(report.violations.empty());

  CHECK_THROWS_AS(check_chordal_deletion_unmixed(make_family(Family::path, 2)), PreconditionError);

  // Pendants on two corners of a triangle: {3,4,5} and {1,5} are both maximal.
  const auto two = SimpleGraph::build({"1", "2", "3", "4", "5"},
                                      {{"1", "2"}, {"2", "3"}, {"1", "3"}, {"1", "4"}, {"2", "5"}});
  CHECK(is_chordal(two).holds);
  CHECK_FALSE(is_unmixed(two).holds);
  CHECK_FALSE(oracle::unmixed(two));
  CHECK_THROWS_AS(check_chordal_deletion_unmixed(two), PreconditionError);

  // Pendants on all three corners.
  const auto three = SimpleGraph::build({"1", "2", "3", "4", "5", "6"},
                                        {{"1", "2"}, {"2", "3"}, {"1", "3"}, {"1", "4"}, {"2", "5"}, {"3", "6"}});
  CHECK(oracle::unmixed(three));
  const auto r = check_chordal_deletion_unmixed(three);
  CHECK(r.pairs_checked == 3);
  CHECK(r.violations.empty());
}

TEST_CASE("random graphs: witnesses and Dirac") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 400; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto g = random_graph(rng, n, static_cast<int>(rng() % 1000));
    const auto verdict = is_chordal(g);
    REQUIRE(verdict.holds == !oracle::has_chordless_cycle(g));
    if (verdict.holds) {
      CHECK(is_perfect_elimination_order(g, verdict.elimination_order));
      CHECK_FALSE(simplicial_vertices(g).empty());
    } else {
      CHECK(is_chordless_cycle(g, verdict.chordless_cycle));
    }
  }
}

TEST_CASE("enumerated chordal graphs") {
  const auto graphs = connected_chordal_graphs(7);
  std::vector<int> counts(8, 0);
  for (const auto& g : graphs) {
    ++counts[static_cast<std::size_t>(g.order())];
    CHECK(is_connected(g));
    CHECK(is_chordal(g).holds);
    CHECK(is_vertex_decomposable(g).outcome);
    if (g.order() < 2) continue;
    for (int y : valid_attachment_points(g)) CHECK(satisfies_exchange(g, g.label(y)));
  }
  CHECK(counts == std::vector<int>{0, 1, 1, 2, 5, 15, 58, 272});

  // Cross-check small sizes against a filter over all graphs up to isomorphism.
  for (int n = 1; n <= 6; ++n) {
    int filtered = 0;
    for (const auto& g : graphs_up_to_iso(n, true, false)) filtered += !oracle::has_chordless_cycle(g);
    CHECK(filtered == counts[static_cast<std::size_t>(n)]);
  }
}
