#include "cycplanar.h"

#include <cstring>
#include <string>

#include "cyp/errors.hpp"
#include "cyp/isomorphism.hpp"
#include "cyp/json_io.hpp"
#include "cyp/planarity.hpp"
#include "cyp/verify.hpp"

struct cyp_graph {
  cyp::MultiGraph graph;
};

namespace {

thread_local std::string g_last_error;

cyp_status map_code(cyp::ErrorCode code) {
  using cyp::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return CYP_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotAnEdge: return CYP_ERR_NOT_AN_EDGE;
    case ErrorCode::LoopContraction: return CYP_ERR_LOOP_CONTRACTION;
    case ErrorCode::SizeLimitExceeded: return CYP_ERR_SIZE_LIMIT;
    case ErrorCode::ZeroStep: return CYP_ERR_ZERO_STEP;
    case ErrorCode::EmptyQ: return CYP_ERR_EMPTY_Q;
    case ErrorCode::NotCanonical: return CYP_ERR_NOT_CANONICAL;
    case ErrorCode::SyntaxError: return CYP_ERR_SYNTAX;
    case ErrorCode::IndexOutOfRange: return CYP_ERR_INDEX_RANGE;
    case ErrorCode::EmptyWord: return CYP_ERR_EMPTY_WORD;
    case ErrorCode::NotRegularizable: return CYP_ERR_NOT_REGULARIZABLE;
    case ErrorCode::SynthesisFailed: return CYP_ERR_SYNTHESIS;
  }
  return CYP_ERR_UNKNOWN;
}

template <typename Fn>
cyp_status guarded(Fn&& fn) {
  try {
    fn();
    return CYP_OK;
  } catch (const cyp::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const cyp::Json::exception& e) {
    g_last_error = e.what();
    return CYP_ERR_BAD_JSON;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CYP_ERR_UNKNOWN;
  }
}

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump_out(const cyp::Json& j) { return copy_out(j.dump(2) + "\n"); }

cyp::Json parse_json(const char* text) {
  if (text == nullptr) cyp::fail(cyp::ErrorCode::InvalidArgument, "null JSON input");
  return cyp::Json::parse(text);
}

cyp_status require(bool ok, const char* message) {
  if (ok) return CYP_OK;
  g_last_error = message;
  return CYP_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* cyp_last_error_message(void) { return g_last_error.c_str(); }

void cyp_string_free(char* s) { delete[] s; }

void cyp_graph_free(cyp_graph* g) { delete g; }

cyp_status cyp_graph_from_circ_json(const char* spec_json, cyp_graph** out) {
  if (auto rc = require(out != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::circ_spec_from_json(parse_json(spec_json));
    *out = new cyp_graph{cyp::build_circ(spec)};
  });
}

cyp_status cyp_graph_from_gamma_json(const char* spec_json, cyp_graph** out) {
  if (auto rc = require(out != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::gamma_spec_from_json(parse_json(spec_json));
    *out = new cyp_graph{cyp::build_gamma(spec)};
  });
}

cyp_status cyp_graph_from_word(int n, const char* word, cyp_graph** out) {
  if (auto rc = require(out != nullptr && word != nullptr, "null argument")) return rc;
  return guarded([&] {
    auto p = cyp::parse_word(n, word);
    *out = new cyp_graph{cyp::whitehead_graph(p)};
  });
}

int cyp_graph_vertex_count(const cyp_graph* g) {
  return g == nullptr ? -1 : g->graph.vertex_count();
}

int cyp_graph_edge_count(const cyp_graph* g) {
  return g == nullptr ? -1 : g->graph.edge_count();
}

cyp_status cyp_graph_is_planar(const cyp_graph* g, int* planar) {
  if (auto rc = require(g != nullptr && planar != nullptr, "null argument")) return rc;
  return guarded([&] { *planar = cyp::is_planar(g->graph) ? 1 : 0; });
}

cyp_status cyp_graph_component_count(const cyp_graph* g, int* count) {
  if (auto rc = require(g != nullptr && count != nullptr, "null argument")) return rc;
  return guarded([&] {
    *count = static_cast<int>(cyp::components(g->graph).size());
  });
}

cyp_status cyp_graph_simple_underlying(const cyp_graph* g, cyp_graph** out) {
  if (auto rc = require(g != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = new cyp_graph{cyp::simple_underlying(g->graph)}; });
}

cyp_status cyp_graph_contract_edge(const cyp_graph* g, int u, int v, cyp_graph** out) {
  if (auto rc = require(g != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = new cyp_graph{cyp::contract_edge(g->graph, u, v).graph};
  });
}

cyp_status cyp_graph_isomorphic(const cyp_graph* g, const cyp_graph* h, int* iso,
                                int* mapping) {
  if (auto rc = require(g != nullptr && h != nullptr && iso != nullptr,
                        "null argument"))
    return rc;
  return guarded([&] {
    auto cert = cyp::are_isomorphic(g->graph, h->graph);
    *iso = cert.has_value() ? 1 : 0;
    if (cert && mapping != nullptr)
      std::memcpy(mapping, cert->mapping.data(), cert->mapping.size() * sizeof(int));
  });
}

cyp_status cyp_graph_to_dot(const cyp_graph* g, char** out) {
  if (auto rc = require(g != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = copy_out(cyp::to_dot(g->graph)); });
}

cyp_status cyp_graph_to_json(const cyp_graph* g, char** out) {
  if (auto rc = require(g != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = dump_out(cyp::graph_to_json(g->graph)); });
}

cyp_status cyp_circ_canonicalize_json(const char* spec_json, char** out_json) {
  if (auto rc = require(out_json != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::circ_spec_from_json(parse_json(spec_json));
    *out_json = dump_out(cyp::circ_spec_to_json(spec));
  });
}

cyp_status cyp_circ_classify_json(const char* spec_json, char** out_json) {
  if (auto rc = require(out_json != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::circ_spec_from_json(parse_json(spec_json));
    *out_json = dump_out(cyp::circ_verdict_to_json(cyp::classify_circ_planar(spec)));
  });
}

cyp_status cyp_circ_components_json(const char* spec_json, char** out_json) {
  if (auto rc = require(out_json != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::circ_spec_from_json(parse_json(spec_json));
    *out_json = dump_out(cyp::circ_decomposition_to_json(cyp::circ_components(spec)));
  });
}

cyp_status cyp_gamma_canonicalize_json(const char* spec_json, char** out_json) {
  if (auto rc = require(out_json != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::gamma_spec_from_json(parse_json(spec_json));
    *out_json = dump_out(cyp::gamma_spec_to_json(spec));
  });
}

cyp_status cyp_gamma_classify_json(const char* spec_json, int require_regular,
                                   char** out_json) {
  if (auto rc = require(out_json != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::gamma_spec_from_json(parse_json(spec_json));
    auto matches = require_regular ? cyp::classify_with_regularity(spec)
                                   : cyp::classify_gamma(spec);
    *out_json = dump_out(cyp::class_matches_to_json(matches));
  });
}

cyp_status cyp_gamma_components_json(const char* spec_json, char** out_json) {
  if (auto rc = require(out_json != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::gamma_spec_from_json(parse_json(spec_json));
    if (spec.Q.empty()) {
      // disjoint union of two circulant graphs; report both decompositions
      cyp::CirculantSpec ca{spec.n, spec.A};
      cyp::CirculantSpec cb{spec.n, spec.B};
      cyp::Json j;
      j["disjoint_union"] = true;
      j["A"] = cyp::circ_decomposition_to_json(cyp::circ_components(ca));
      j["B"] = cyp::circ_decomposition_to_json(cyp::circ_components(cb));
      *out_json = dump_out(j);
    } else {
      *out_json =
          dump_out(cyp::gamma_decomposition_to_json(cyp::gamma_components(spec)));
    }
  });
}

cyp_status cyp_gamma_conditions_json(const char* spec_json, char** out_json) {
  if (auto rc = require(out_json != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::gamma_spec_from_json(parse_json(spec_json));
    *out_json = dump_out(cyp::condition_report_to_json(cyp::check_conditions(spec)));
  });
}

cyp_status cyp_word_parse_json(int n, const char* word, char** out_json) {
  if (auto rc = require(word != nullptr && out_json != nullptr, "null argument"))
    return rc;
  return guarded([&] {
    auto p = cyp::parse_word(n, word);
    cyp::Json j = cyp::presentation_to_json(p);
    j["letters"] = static_cast<int>(p.word.size());
    j["cyclically_reduced"] = cyp::is_cyclically_reduced(p);
    *out_json = dump_out(j);
  });
}

cyp_status cyp_word_spec_json(int n, const char* word, char** out_json) {
  if (auto rc = require(word != nullptr && out_json != nullptr, "null argument"))
    return rc;
  return guarded([&] {
    auto spec = cyp::reduced_whitehead_spec(cyp::parse_word(n, word));
    *out_json = dump_out(cyp::gamma_spec_to_json(spec));
  });
}

cyp_status cyp_word_plan_json(const char* gamma_spec_json, char** out_json) {
  if (auto rc = require(out_json != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::gamma_spec_from_json(parse_json(gamma_spec_json));
    *out_json = dump_out(cyp::plan_to_json(cyp::plan_multiplicities(spec)));
  });
}

cyp_status cyp_word_synthesize_json(const char* gamma_spec_json, char** out_json) {
  if (auto rc = require(out_json != nullptr, "null output pointer")) return rc;
  return guarded([&] {
    auto spec = cyp::gamma_spec_from_json(parse_json(gamma_spec_json));
    *out_json = dump_out(cyp::presentation_to_json(cyp::synthesize_word(spec)));
  });
}

cyp_status cyp_verify_theorem_json(int n_min, int n_max, int max_a, int max_b,
                                   int max_q, char** out_json, int* ok) {
  if (auto rc = require(out_json != nullptr && ok != nullptr, "null argument"))
    return rc;
  return guarded([&] {
    cyp::EnumerationBounds bounds{n_min, n_max, max_a, max_b, max_q};
    auto report = cyp::verify_theorem_A(bounds);
    *out_json = dump_out(cyp::report_to_json(report));
    *ok = report.ok() ? 1 : 0;
  });
}

cyp_status cyp_verify_prop31_json(int n_max, char** out_json, int* ok) {
  if (auto rc = require(out_json != nullptr && ok != nullptr, "null argument"))
    return rc;
  return guarded([&] {
    auto report = cyp::verify_prop31(n_max);
    *out_json = dump_out(cyp::report_to_json(report));
    *ok = report.ok() ? 1 : 0;
  });
}

cyp_status cyp_verify_claims_json(const int* n_list, size_t count, char** out_json,
                                  int* ok) {
  if (auto rc = require(out_json != nullptr && ok != nullptr &&
                            (n_list != nullptr || count == 0),
                        "null argument"))
    return rc;
  return guarded([&] {
    std::vector<int> ns(n_list, n_list + count);
    auto report = cyp::verify_named_claims(ns);
    *out_json = dump_out(cyp::report_to_json(report));
    *ok = report.ok() ? 1 : 0;
  });
}

}  // extern "C"
