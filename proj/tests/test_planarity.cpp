#include <doctest.h>

#include <random>

#include "cyp/circulant.hpp"
#include "cyp/gamma.hpp"
#include "cyp/multigraph.hpp"
#include "cyp/planarity.hpp"
#include "support/generators.hpp"
#include "support/kuratowski_oracle.hpp"

using namespace cyp;

namespace {

MultiGraph complete(int n) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

MultiGraph complete_bipartite(int a, int b) {
  MultiGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

MultiGraph petersen() {
  MultiGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

MultiGraph from_mask(int n, unsigned mask) {
  MultiGraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask & (1u << bit)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_SUITE("planarity") {

TEST_CASE("named graphs") {
  CHECK_FALSE(is_planar(complete(5)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
  CHECK(is_planar(complete(4)));
  CHECK(is_planar(complete_bipartite(2, 3)));
  CHECK_FALSE(is_planar(petersen()));
}

TEST_CASE("tiny graphs are planar") {
  CHECK(is_planar(MultiGraph(0)));
  CHECK(is_planar(MultiGraph(1)));
  MultiGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(0, 0);
  CHECK(is_planar(g));
}

TEST_CASE("the double-step circulant on 8 vertices is planar") {
  CHECK(is_planar(build_circ(canonicalize_circ(8, {1, 2}))));
}

TEST_CASE("the complete join at n = 3 is K33") {
  const MultiGraph g = build_gamma(canonicalize_gamma(3, {}, {}, {0, 1, 2}));
  CHECK_FALSE(is_planar(g));
}

TEST_CASE("planarity only depends on the simple underlying graph") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = testing::random_multigraph(rng, 8);
    CHECK(is_planar(g) == is_planar(simple_underlying(g)));
  }
}

TEST_CASE("adding an edge never makes a non-planar graph planar") {
  std::mt19937 rng(5);
  int seen = 0;
  while (seen < 20) {
    MultiGraph g = testing::random_simple_graph(rng, 8, 0.6);
    if (is_planar(g)) continue;
    ++seen;
    std::uniform_int_distribution<int> vertex(0, g.vertex_count() - 1);
    MultiGraph extended = g;
    extended.add_edge(vertex(rng), vertex(rng));
    CHECK_FALSE(is_planar(extended));
  }
}

TEST_CASE("oracle sanity") {
  CHECK_FALSE(testing::oracle_is_planar(complete(5)));
  CHECK_FALSE(testing::oracle_is_planar(complete_bipartite(3, 3)));
  CHECK(testing::oracle_is_planar(complete(4)));
  MultiGraph k5 = complete(5);
  const auto contracted = contract_edge(k5, 0, 1);  // K4 with doubled spokes
  CHECK(testing::oracle_is_planar(contracted.graph));
}

TEST_CASE("exhaustive agreement with the subdivision oracle up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
      const MultiGraph g = from_mask(n, mask);
      CHECK(is_planar(g) == testing::oracle_is_planar(g));
    }
  }
}

TEST_CASE("random agreement with the subdivision oracle on 6..8 vertices") {
  std::mt19937 rng(13);
  const double densities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  for (int trial = 0; trial < 500; ++trial) {
    const MultiGraph g =
        testing::random_simple_graph(rng, 8, densities[trial % 5]);
    CHECK(is_planar(g) == testing::oracle_is_planar(g));
  }
}

}  // TEST_SUITE
