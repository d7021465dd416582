#include <doctest.h>

#include <random>

#include "cmgraph/complex.hpp"
#include "cmgraph/construction.hpp"
#include "cmgraph/errors.hpp"
#include "cmgraph/harness.hpp"
#include "cmgraph/independence.hpp"
#include "oracles.hpp"

using namespace cmg;

namespace {

SimpleGraph cycle(int n) { return make_family(Family::cycle, n); }

VertexSet labeled(const SimpleGraph& g, std::vector<VertexLabel> labels) { return g.set_of(labels); }

}  // namespace

TEST_CASE("maximal independent sets of small graphs") {
  const auto k3 = make_family(Family::complete, 3);
  CHECK(maximal_independent_sets(k3).sets ==
        std::vector<VertexSet>{labeled(k3, {"1"}), labeled(k3, {"2"}), labeled(k3, {"3"})});

  const auto c4 = cycle(4);
  CHECK(maximal_independent_sets(c4).sets == std::vector<VertexSet>{labeled(c4, {"1", "3"}), labeled(c4, {"2", "4"})});

  const SimpleGraph empty;
  CHECK(maximal_independent_sets(empty).sets == std::vector<VertexSet>{VertexSet{}});
  CHECK(independence_number(empty) == 0);
}

TEST_CASE("independence number") {
  CHECK(independence_number(cycle(4)) == 2);
  CHECK(independence_number(cycle(5)) == 2);
  for (int n = 1; n <= 7; ++n) CHECK(independence_number(make_family(Family::complete, n)) == 1);
}

TEST_CASE("unmixed") {
  CHECK(is_unmixed(cycle(4)).holds);
  const auto c6 = cycle(6);
  const auto verdict = is_unmixed(c6);
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness);
  CHECK(verdict.witness->first == labeled(c6, {"1", "4"}));
  CHECK(verdict.witness->second == labeled(c6, {"1", "3", "5"}));
  CHECK(verdict.alpha == 3);
}

TEST_CASE("cycle minus a vertex") {
  for (int m = 3; m <= 10; ++m) CHECK(cycle_deletion_unmixed(m) == (m == 3 || m == 5));
  CHECK_THROWS_AS(cycle_deletion_unmixed(2), PreconditionError);
}

TEST_CASE("two C4-of-C4 maximal sets are found") {
  const auto h = attach_uniform(cycle(4), cycle(4), "1");
  const auto family = maximal_independent_sets(h);
  const auto small = labeled(h, {"1.1", "1.3", "3.1", "3.3", "2.3", "4.3"});
  const auto large = labeled(h, {"1.1", "1.3", "3.1", "3.3", "2.2", "2.4", "4.2", "4.4"});
  CHECK(family.contains(small));
  CHECK(family.contains(large));
  const auto verdict = is_unmixed(h);
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness);
  CHECK(verdict.witness->first.size() == 6);
  CHECK(verdict.witness->second.size() == 8);
}

TEST_CASE("independence complex") {
  const auto k2 = make_family(Family::complete, 2);
  CHECK(independence_complex(k2).facets() == std::vector<VertexSet>{VertexSet::single(0), VertexSet::single(1)});
  const auto edgeless = SimpleGraph::build({"a", "b", "c"}, {});
  CHECK(independence_complex(edgeless).is_simplex());
  CHECK(independence_complex(edgeless).dimension() == 2);
  CHECK(independence_complex(cycle(4)).facets().size() == 2);
}

TEST_CASE("vertex cap") {
  const auto big = make_family(Family::path, 44);
  CHECK_THROWS_AS(maximal_independent_sets(big), CapExceeded);
  Limits roomy;
  roomy.vertex_cap = 64;
  CHECK_FALSE(is_unmixed(big, roomy).holds);
}

TEST_CASE("random graphs agree with the subset filter") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    const int n = static_cast<int>(rng() % 13);
    const auto g = random_graph(rng, n, static_cast<int>(rng() % 1000));
    auto fast = maximal_independent_sets(g).sets;
    std::sort(fast.begin(), fast.end());
    const auto slow = oracle::maximal_independent_sets(g);
    REQUIRE(fast == slow);

    const auto delta = independence_complex(g);
    if (n > 0) CHECK(independence_number(g) == delta.dimension() + 1);
    CHECK(is_unmixed(g).holds == is_pure(delta));
    CHECK(is_unmixed(g).holds == oracle::unmixed(g));
  }
}
