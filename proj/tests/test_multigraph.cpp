#include <doctest.h>

#include <random>
#include <sstream>

#include "cyp/errors.hpp"
#include "cyp/gamma.hpp"
#include "cyp/multigraph.hpp"
#include "cyp/planarity.hpp"
#include "support/generators.hpp"

using namespace cyp;

TEST_SUITE("multigraph") {

TEST_CASE("simple_underlying drops loops and collapses multiedges") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(2, 2);
  const MultiGraph s = simple_underlying(g);
  CHECK(s.vertex_count() == 3);
  CHECK(s.sorted_edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("simple_underlying is the identity on simple loopless graphs") {
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  CHECK(simple_underlying(g).same_edges(g));
}

TEST_CASE("degree counts loops twice") {
  MultiGraph g(2);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 1);
}

TEST_CASE("components of an edgeless graph are singletons") {
  MultiGraph g(3);
  const auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0});
  CHECK(comps[2] == std::vector<int>{2});
}

TEST_CASE("components of two triangles") {
  // the step-2 hexagon: 0-2-4 and 1-3-5
  MultiGraph g(6);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 2) % 6);
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 2, 4});
  CHECK(comps[1] == std::vector<int>{1, 3, 5});
}

TEST_CASE("a cycle is connected") {
  MultiGraph g(5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  CHECK(components(g).size() == 1);
}

TEST_CASE("contracting a path edge") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const auto result = contract_edge(g, 0, 1);
  CHECK(result.graph.vertex_count() == 2);
  CHECK(result.graph.sorted_edges() == std::vector<Edge>{{0, 1}});
  CHECK(result.relabeling == std::vector<int>{0, 0, 1});
}

TEST_CASE("contracting a triangle edge leaves a doubled edge") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  const auto result = contract_edge(g, 0, 1);
  CHECK(result.graph.vertex_count() == 2);
  CHECK(result.graph.sorted_edges() == std::vector<Edge>{{0, 1}, {0, 1}});
}

TEST_CASE("contract errors") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(contract_edge(g, 0, 2), Error);
  CHECK_THROWS_AS(contract_edge(g, 1, 1), Error);
  try {
    contract_edge(g, 1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopContraction);
  }
}

TEST_CASE("contraction keeps the Euler accounting") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    MultiGraph g = testing::random_multigraph(rng, 8);
    Edge pick{-1, -1};
    for (const auto& e : g.edges())
      if (e.first != e.second) {
        pick = e;
        break;
      }
    if (pick.first == -1) continue;
    const auto result = contract_edge(g, pick.first, pick.second);
    CHECK(result.graph.vertex_count() == g.vertex_count() - 1);
    CHECK(result.graph.edge_count() == g.edge_count() - 1);
  }
}

TEST_CASE("repeated contraction reaches K5 from the {1},{1},{0,2} graph") {
  // contract the rungs (v_i, v_i') for i = 1..3 and simplify
  MultiGraph g = build_gamma(canonicalize_gamma(4, {1}, {1}, {0, 2}));
  std::vector<int> where(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) where[i] = i;
  for (int i = 1; i <= 3; ++i) {
    auto result = contract_edge(g, where[i], where[4 + i]);
    g = result.graph;
    for (auto& w : where) w = result.relabeling[w];
  }
  const MultiGraph s = simple_underlying(g);
  CHECK(s.vertex_count() == 5);
  CHECK(s.edge_count() == 10);
  CHECK_FALSE(is_planar(s));
}

TEST_CASE("to_dot emits labels and one line per edge") {
  MultiGraph g(2);
  g.add_edge(0, 1);
  const std::string dot = to_dot(g);
  CHECK(dot.find("\"v0\" -- \"v1\";") != std::string::npos);

  MultiGraph empty(0);
  CHECK(to_dot(empty) == "graph {\n}\n");
}

TEST_CASE("to_dot line count is vertices + edges + 2") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiGraph g = testing::random_multigraph(rng, 6);
    const std::string dot = to_dot(g);
    int lines = 0;
    for (char c : dot)
      if (c == '\n') ++lines;
    CHECK(lines == g.vertex_count() + g.edge_count() + 2);
  }
}

TEST_CASE("induced subgraph keeps internal edges only") {
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  const MultiGraph sub = induced_subgraph(g, {1, 2, 3});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.sorted_edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

}  // TEST_SUITE
