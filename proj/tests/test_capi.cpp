#include <doctest.h>

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "cycplanar.h"

namespace {

std::string take(char* owned) {
  REQUIRE(owned != nullptr);
  std::string out = owned;
  cyp_string_free(owned);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("graph handles round-trip through construction and queries") {
  cyp_graph* g = nullptr;
  REQUIRE(cyp_graph_from_circ_json("{\"n\":8,\"S\":[1,2]}", &g) == CYP_OK);
  CHECK(cyp_graph_vertex_count(g) == 8);
  CHECK(cyp_graph_edge_count(g) == 16);
  int planar = 0;
  REQUIRE(cyp_graph_is_planar(g, &planar) == CYP_OK);
  CHECK(planar == 1);
  int comps = 0;
  REQUIRE(cyp_graph_component_count(g, &comps) == CYP_OK);
  CHECK(comps == 1);
  char* dot = nullptr;
  REQUIRE(cyp_graph_to_dot(g, &dot) == CYP_OK);
  CHECK(take(dot).find("\"u0\" -- \"u1\";") != std::string::npos);
  cyp_graph_free(g);
}

TEST_CASE("classification crosses the boundary as JSON") {
  char* out = nullptr;
  REQUIRE(cyp_gamma_classify_json("{\"n\":6,\"A\":[1],\"B\":[2],\"Q\":[0]}", 0,
                                  &out) == CYP_OK);
  const auto matches = nlohmann::json::parse(take(out));
  REQUIRE(matches.size() == 1);
  CHECK(matches[0]["class"] == "II.11");
  CHECK(matches[0]["q"] == 0);
  CHECK(matches[0]["s"] == 1);
  CHECK(matches[0]["swapped"] == false);
}

TEST_CASE("condition reports and components") {
  char* out = nullptr;
  REQUIRE(cyp_gamma_conditions_json("{\"n\":6,\"A\":[3],\"B\":[3],\"Q\":[0,2]}",
                                    &out) == CYP_OK);
  const auto report = nlohmann::json::parse(take(out));
  CHECK(report["c1"] == true);
  CHECK(report["c8"] == false);

  REQUIRE(cyp_gamma_components_json("{\"n\":6,\"A\":[2],\"B\":[4],\"Q\":[1,3]}",
                                    &out) == CYP_OK);
  const auto decomposition = nlohmann::json::parse(take(out));
  CHECK(decomposition["d"] == 2);
  CHECK(decomposition["quotient"]["n"] == 3);

  REQUIRE(cyp_gamma_components_json("{\"n\":6,\"A\":[1],\"B\":[2],\"Q\":[]}",
                                    &out) == CYP_OK);
  const auto disjoint = nlohmann::json::parse(take(out));
  CHECK(disjoint["disjoint_union"] == true);
  CHECK(disjoint["A"]["d"] == 1);
  CHECK(disjoint["B"]["d"] == 2);
}

TEST_CASE("words parse, reduce, and synthesize through the boundary") {
  char* out = nullptr;
  REQUIRE(cyp_word_parse_json(6, "x0 x1 x2^-1", &out) == CYP_OK);
  const auto parsed = nlohmann::json::parse(take(out));
  CHECK(parsed["letters"] == 3);
  CHECK(parsed["cyclically_reduced"] == true);
  CHECK(parsed["word"] == "x0 x1 x2^-1");

  REQUIRE(cyp_word_spec_json(6, "x0 x1 x2^-1", &out) == CYP_OK);
  const auto spec = nlohmann::json::parse(take(out));
  CHECK(spec["A"] == nlohmann::json::array({1}));
  CHECK(spec["B"] == nlohmann::json::array({2}));
  CHECK(spec["Q"] == nlohmann::json::array({1}));

  const std::string spec_text = spec.dump();
  REQUIRE(cyp_word_synthesize_json(spec_text.c_str(), &out) == CYP_OK);
  const auto synth = nlohmann::json::parse(take(out));
  REQUIRE(cyp_word_spec_json(6, synth["word"].get<std::string>().c_str(), &out) ==
          CYP_OK);
  CHECK(nlohmann::json::parse(take(out)) == spec);

  REQUIRE(cyp_word_plan_json(spec_text.c_str(), &out) == CYP_OK);
  const auto plan = nlohmann::json::parse(take(out));
  CHECK(plan["m_a"].size() == 1);
}

TEST_CASE("error codes and messages") {
  cyp_graph* g = nullptr;
  CHECK(cyp_graph_from_circ_json("{not json", &g) == CYP_ERR_BAD_JSON);
  CHECK(std::strlen(cyp_last_error_message()) > 0);

  char* out = nullptr;
  CHECK(cyp_gamma_classify_json("{\"n\":6,\"A\":[0],\"B\":[],\"Q\":[0]}", 0, &out) ==
        CYP_ERR_ZERO_STEP);
  CHECK(cyp_gamma_classify_json("{\"n\":6,\"A\":[1],\"B\":[1],\"Q\":[]}", 0, &out) ==
        CYP_ERR_EMPTY_Q);
  CHECK(cyp_word_parse_json(3, "x9", &out) == CYP_ERR_INDEX_RANGE);
  CHECK(cyp_word_parse_json(3, "zz", &out) == CYP_ERR_SYNTAX);
  CHECK(cyp_word_synthesize_json("{\"n\":4,\"A\":[1],\"B\":[],\"Q\":[0]}", &out) ==
        CYP_ERR_NOT_REGULARIZABLE);
  CHECK(cyp_graph_is_planar(nullptr, nullptr) == CYP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("isomorphism with a mapping buffer") {
  cyp_graph* g = nullptr;
  cyp_graph* h = nullptr;
  REQUIRE(cyp_graph_from_gamma_json("{\"n\":6,\"A\":[1],\"B\":[1],\"Q\":[0]}", &g) ==
          CYP_OK);
  REQUIRE(cyp_graph_from_gamma_json("{\"n\":6,\"A\":[],\"B\":[],\"Q\":[0,1,5]}", &h) ==
          CYP_OK);
  int iso = 0;
  int mapping[12];
  REQUIRE(cyp_graph_isomorphic(g, h, &iso, mapping) == CYP_OK);
  CHECK(iso == 1);
  bool bijective = true;
  bool seen[12] = {};
  for (int image : mapping) {
    if (image < 0 || image >= 12 || seen[image]) bijective = false;
    else seen[image] = true;
  }
  CHECK(bijective);
  cyp_graph_free(g);
  cyp_graph_free(h);
}

TEST_CASE("small verification through the boundary") {
  char* out = nullptr;
  int ok = 0;
  REQUIRE(cyp_verify_theorem_json(2, 4, 3, 3, 4, &out, &ok) == CYP_OK);
  CHECK(ok == 1);
  const auto report = nlohmann::json::parse(take(out));
  CHECK(report["verified"] == true);
  CHECK(report["specs_checked"] == 12 + 28 + 240);
}

}  // TEST_SUITE
