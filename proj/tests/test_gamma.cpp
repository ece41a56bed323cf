#include <doctest.h>

#include <numeric>
#include <random>

#include "cyp/errors.hpp"
#include "cyp/gamma.hpp"
#include "cyp/isomorphism.hpp"
#include "cyp/multigraph.hpp"
#include "cyp/planarity.hpp"
#include "support/generators.hpp"

using namespace cyp;

namespace {

bool has_class(const std::vector<ClassMatch>& matches, const std::string& id) {
  for (const auto& m : matches)
    if (m.class_id == id) return true;
  return false;
}

}  // namespace

TEST_SUITE("gamma") {

TEST_CASE("canonicalization folds A and B but not Q") {
  const GammaSpec a = canonicalize_gamma(6, {5}, {4}, {0});
  CHECK(a.A == std::vector<int>{1});
  CHECK(a.B == std::vector<int>{2});
  CHECK(a.Q == std::vector<int>{0});

  const GammaSpec b = canonicalize_gamma(6, {1, 5}, {}, {3});
  CHECK(b.A == std::vector<int>{1});
  CHECK(b.B.empty());
  CHECK(b.Q == std::vector<int>{3});

  const GammaSpec c = canonicalize_gamma(2, {1}, {1}, {0, 1});
  CHECK(c.A == std::vector<int>{1});
  CHECK(c.B == std::vector<int>{1});
  CHECK(c.Q == std::vector<int>{0, 1});
}

TEST_CASE("the strict constructor rejects 0 steps, the loose one keeps them") {
  CHECK_THROWS_AS(canonicalize_gamma(4, {0}, {}, {1}), Error);
  const GammaSpec loose = canonicalize_gamma_loose(4, {0}, {}, {1});
  CHECK(loose.A == std::vector<int>{0});
}

TEST_CASE("construction counts") {
  const MultiGraph square = build_gamma(canonicalize_gamma(2, {}, {}, {0, 1}));
  CHECK(square.vertex_count() == 4);
  CHECK(square.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(square.degree(v) == 2);

  CHECK(build_gamma(canonicalize_gamma(6, {1}, {2}, {0})).edge_count() == 18);
  CHECK(build_gamma(canonicalize_gamma(6, {3}, {3}, {0})).edge_count() == 12);
}

TEST_CASE("labels distinguish the two orbits") {
  const MultiGraph g = build_gamma(canonicalize_gamma(3, {1}, {1}, {0}));
  CHECK(g.label(0) == "v0");
  CHECK(g.label(3) == "v0'");
}

TEST_CASE("component decomposition") {
  const auto d1 = gamma_components(canonicalize_gamma(6, {2}, {4}, {1, 3}));
  CHECK(d1.d == 2);
  CHECK(d1.quotient == canonicalize_gamma(3, {1}, {1}, {1, 2}));

  const auto d2 = gamma_components(canonicalize_gamma(5, {1}, {1}, {0}));
  CHECK(d2.d == 1);

  const auto d3 = gamma_components(canonicalize_gamma(4, {}, {}, {0, 2}));
  CHECK(d3.d == 2);
  CHECK(d3.quotient == canonicalize_gamma(2, {}, {}, {0, 1}));
  const MultiGraph g = build_gamma(canonicalize_gamma(4, {}, {}, {0, 2}));
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  for (const auto& comp : comps) CHECK(comp.size() == 4);
}

TEST_CASE("decomposition requires nonempty Q") {
  CHECK_THROWS_AS(gamma_components(canonicalize_gamma(4, {1}, {1}, {})), Error);
}

TEST_CASE("decomposition count matches the graph with isomorphic pieces") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const GammaSpec spec = testing::random_gamma_spec(rng, 2, 10);
    const auto decomposition = gamma_components(spec);
    const MultiGraph g = build_gamma(spec);
    const auto comps = components(g);
    REQUIRE(static_cast<int>(comps.size()) == decomposition.d);
    const MultiGraph quotient = build_gamma(decomposition.quotient);
    for (const auto& comp : comps) {
      const MultiGraph piece = induced_subgraph(g, comp);
      const auto cert = are_isomorphic(piece, quotient);
      REQUIRE(cert.has_value());
      CHECK(certificate_valid(piece, quotient, *cert));
    }
  }
}

TEST_CASE("classification examples") {
  const auto i1 = classify_gamma(canonicalize_gamma(6, {1}, {1}, {0, 1}));
  CHECK(has_class(i1, "I.1"));
  for (const auto& m : i1)
    if (m.class_id == "I.1") {
      CHECK(m.q == 0);
      CHECK(m.s == 1);
    }

  const auto ii11 = classify_gamma(canonicalize_gamma(6, {1}, {2}, {0}));
  REQUIRE(ii11.size() == 1);
  CHECK(ii11[0] == ClassMatch{"II.11", 0, 1, MatchOrientation::AsGiven});

  CHECK(classify_gamma(canonicalize_gamma(6, {2}, {2}, {0, 1})).empty());

  const auto iii13 = classify_gamma(canonicalize_gamma(6, {3}, {3}, {0, 2}));
  CHECK(has_class(iii13, "III.13"));
  for (const auto& m : iii13)
    if (m.class_id == "III.13") {
      CHECK(m.q == 0);
      CHECK(m.s == 2);
    }
}

TEST_CASE("classification errors") {
  CHECK_THROWS_AS(classify_gamma(canonicalize_gamma(6, {1}, {1}, {})), Error);
  GammaSpec not_canonical;
  not_canonical.n = 6;
  not_canonical.A = {5};
  not_canonical.Q = {0};
  CHECK_THROWS_AS(classify_gamma(not_canonical), Error);
  GammaSpec loose = canonicalize_gamma_loose(6, {0}, {1}, {0});
  CHECK_THROWS_AS(classify_gamma(loose), Error);
}

TEST_CASE("matches regenerate the spec") {
  std::mt19937 rng(29);
  std::vector<GammaSpec> specs = {
      canonicalize_gamma(6, {1}, {1}, {0, 1}),
      canonicalize_gamma(6, {1}, {2}, {0}),
      canonicalize_gamma(6, {3}, {3}, {0, 2}),
      canonicalize_gamma(8, {1}, {2}, {3, 4}),
      canonicalize_gamma(2, {1}, {1}, {0, 1}),
  };
  for (int trial = 0; trial < 150; ++trial)
    specs.push_back(testing::random_gamma_spec(rng, 2, 9));
  int verified = 0;
  for (const GammaSpec& spec : specs) {
    const auto matches = classify_gamma(spec);
    for (const auto& m : matches) {
      const TableRow* row = nullptr;
      for (const TableRow& r : classification_table())
        if (m.class_id == r.id) row = &r;
      REQUIRE(row != nullptr);
      const auto inst = instantiate_row(*row, spec.n, m.q, m.s, m.orientation);
      REQUIRE(inst.has_value());
      CHECK(inst->A == spec.A);
      CHECK(inst->B == spec.B);
      CHECK(inst->Q == spec.Q);
      ++verified;
    }
  }
  CHECK(verified >= 5);
}

TEST_CASE("classification respects the swap symmetry") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const GammaSpec spec = testing::random_gamma_spec(rng, 2, 9);
    std::vector<int> negated;
    for (int q : spec.Q) negated.push_back((spec.n - q) % spec.n);
    const GammaSpec swapped = canonicalize_gamma(spec.n, spec.B, spec.A, negated);
    const auto lhs = classify_gamma(spec);
    const auto rhs = classify_gamma(swapped);
    std::vector<std::string> lhs_ids, rhs_ids;
    for (const auto& m : lhs) lhs_ids.push_back(m.class_id);
    for (const auto& m : rhs) rhs_ids.push_back(m.class_id);
    CHECK(lhs_ids == rhs_ids);
  }
}

TEST_CASE("regularity filter") {
  CHECK(classify_with_regularity(canonicalize_gamma(6, {1}, {}, {0, 1})).empty());
  CHECK_FALSE(classify_gamma(canonicalize_gamma(6, {1}, {}, {0, 1})).empty());

  const auto i5 = classify_with_regularity(canonicalize_gamma(6, {}, {}, {0, 1}));
  REQUIRE(has_class(i5, "I.5"));
  for (const auto& m : i5)
    if (m.class_id == "I.5") {
      CHECK(m.q == 0);
      CHECK(m.s == 1);
    }

  CHECK(has_class(classify_with_regularity(canonicalize_gamma(6, {1}, {1}, {0})),
                  "I.3"));
}

TEST_CASE("condition report examples") {
  const ConditionReport figure = check_conditions(canonicalize_gamma(6, {3}, {3}, {0, 2}));
  CHECK(figure.c1_planar);
  CHECK(figure.c2prime_regularizable);
  CHECK(figure.c3a_loopless);
  CHECK(figure.c3b_simple);
  CHECK(figure.c4_vertex_count);
  CHECK(figure.c5_automorphism);
  CHECK(figure.c6_intra_orbit_edge);
  CHECK(figure.c7_inter_orbit_edge);
  CHECK_FALSE(figure.c8_unit_steps);
  CHECK(figure.edge_orbit_lengths == std::vector<int>{3, 3, 6, 6});

  const ConditionReport unit = check_conditions(canonicalize_gamma(6, {1}, {1}, {0}));
  CHECK(unit.c1_planar);
  CHECK(unit.c2prime_regularizable);
  CHECK(unit.c5_automorphism);
  CHECK(unit.c6_intra_orbit_edge);
  CHECK(unit.c7_inter_orbit_edge);
  CHECK(unit.c8_unit_steps);

  const ConditionReport lopsided = check_conditions(canonicalize_gamma(6, {1}, {}, {0}));
  CHECK_FALSE(lopsided.c2prime_regularizable);
}

TEST_CASE("the loose constructor reports loops through c3a") {
  const ConditionReport r = check_conditions(canonicalize_gamma_loose(4, {0}, {1}, {0}));
  CHECK_FALSE(r.c3a_loopless);
  CHECK(r.c5_automorphism);
}

TEST_CASE("swapping a single-step pair onto three joins gives isomorphic graphs") {
  for (int n : {4, 6}) {
    for (int s = 1; 2 * s <= n; ++s) {
      if (std::gcd(n, s) != 1) continue;
      const MultiGraph lhs = build_gamma(canonicalize_gamma(n, {s}, {s}, {0}));
      const MultiGraph rhs =
          build_gamma(canonicalize_gamma(n, {}, {}, {0, s, n - s}));
      CHECK(are_isomorphic(lhs, rhs).has_value());
    }
  }
}

}  // TEST_SUITE
