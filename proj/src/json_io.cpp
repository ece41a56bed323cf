#include "cyp/json_io.hpp"

#include "cyp/errors.hpp"

namespace cyp {

namespace {

std::vector<int> int_list(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_array())
    fail(ErrorCode::InvalidArgument, std::string("expected array for \"") + key + "\"");
  std::vector<int> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer())
      fail(ErrorCode::InvalidArgument, std::string("expected integers in \"") + key + "\"");
    out.push_back(v.get<int>());
  }
  return out;
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    fail(ErrorCode::InvalidArgument, std::string("expected integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

Json plan_side(const std::map<int, int>& m) {
  Json out = Json::array();
  for (const auto& [step, count] : m) out.push_back(Json::array({step, count}));
  return out;
}

}  // namespace

Json graph_to_json(const MultiGraph& g) {
  Json j;
  j["vertex_count"] = g.vertex_count();
  Json labels = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  j["labels"] = labels;
  Json edges = Json::array();
  for (const auto& [u, v] : g.sorted_edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = edges;
  return j;
}

Json circ_spec_to_json(const CirculantSpec& spec) {
  return Json{{"n", spec.n}, {"S", spec.steps}};
}

CirculantSpec circ_spec_from_json(const Json& j) {
  return canonicalize_circ(int_field(j, "n"), int_list(j, "S"));
}

Json circ_verdict_to_json(const CircPlanarVerdict& verdict) {
  Json j;
  j["planar"] = verdict.planar;
  j["case"] = to_string(verdict.planar_case);
  j["connected"] = verdict.connected;
  j["s"] = verdict.s ? Json(*verdict.s) : Json(nullptr);
  j["d"] = verdict.d ? Json(*verdict.d) : Json(nullptr);
  return j;
}

Json circ_decomposition_to_json(const CircDecomposition& d) {
  return Json{{"d", d.d}, {"quotient", circ_spec_to_json(d.quotient)}};
}

Json gamma_spec_to_json(const GammaSpec& spec) {
  return Json{{"n", spec.n}, {"A", spec.A}, {"B", spec.B}, {"Q", spec.Q}};
}

GammaSpec gamma_spec_from_json(const Json& j) {
  return canonicalize_gamma(int_field(j, "n"), int_list(j, "A"), int_list(j, "B"),
                            int_list(j, "Q"));
}

Json class_matches_to_json(const std::vector<ClassMatch>& matches) {
  Json out = Json::array();
  for (const ClassMatch& m : matches) {
    out.push_back(Json{{"class", m.class_id},
                       {"q", m.q},
                       {"s", m.s},
                       {"swapped", m.orientation == MatchOrientation::Swapped}});
  }
  return out;
}

Json condition_report_to_json(const ConditionReport& r) {
  Json j;
  j["c1"] = r.c1_planar;
  j["c2prime"] = r.c2prime_regularizable;
  j["c3a"] = r.c3a_loopless;
  j["c3b"] = r.c3b_simple;
  j["c4"] = r.c4_vertex_count;
  j["c5"] = r.c5_automorphism;
  j["c6"] = r.c6_intra_orbit_edge;
  j["c7"] = r.c7_inter_orbit_edge;
  j["c8"] = r.c8_unit_steps;
  j["edge_orbit_lengths"] = r.edge_orbit_lengths;
  return j;
}

Json gamma_decomposition_to_json(const GammaDecomposition& d) {
  return Json{{"d", d.d}, {"quotient", gamma_spec_to_json(d.quotient)}};
}

Json presentation_to_json(const CyclicPresentation& p) {
  return Json{{"n", p.n}, {"word", word_to_string(p)}};
}

CyclicPresentation presentation_from_json(const Json& j) {
  if (!j.contains("word") || !j.at("word").is_string())
    fail(ErrorCode::InvalidArgument, "expected string field \"word\"");
  return parse_word(int_field(j, "n"), j.at("word").get<std::string>());
}

Json plan_to_json(const MultiplicityPlan& plan) {
  return Json{{"m_a", plan_side(plan.m_a)},
              {"m_b", plan_side(plan.m_b)},
              {"m_q", plan_side(plan.m_q)}};
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["specs_checked"] = report.specs_checked;
  Json items = Json::array();
  for (const Disagreement& d : report.disagreements) {
    items.push_back(Json{{"spec", gamma_spec_to_json(d.spec)},
                         {"oracle", d.oracle},
                         {"classifier", d.classifier},
                         {"note", d.note}});
  }
  j["disagreements"] = items;
  j["verified"] = report.disagreements.empty();
  return j;
}

}  // namespace cyp
