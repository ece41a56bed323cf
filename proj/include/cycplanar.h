/* C interface to the cycplanar core: graphs with cyclic symmetry, their
 * planarity classification, and the word <-> graph conversions. Graph
 * values live behind opaque handles; structured data crosses the boundary
 * as JSON text matching the schemas documented in the README.
 *
 * Every function returns CYP_OK on success; on failure the out-parameters
 * are untouched and cyp_last_error_message() describes the problem for
 * the calling thread. Strings returned through char** are owned by the
 * caller and released with cyp_string_free().
 */
#ifndef CYCPLANAR_H
#define CYCPLANAR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cyp_status {
  CYP_OK = 0,
  CYP_ERR_INVALID_ARGUMENT = 1,
  CYP_ERR_NOT_AN_EDGE = 2,
  CYP_ERR_LOOP_CONTRACTION = 3,
  CYP_ERR_SIZE_LIMIT = 4,
  CYP_ERR_ZERO_STEP = 5,
  CYP_ERR_EMPTY_Q = 6,
  CYP_ERR_NOT_CANONICAL = 7,
  CYP_ERR_SYNTAX = 8,
  CYP_ERR_INDEX_RANGE = 9,
  CYP_ERR_EMPTY_WORD = 10,
  CYP_ERR_NOT_REGULARIZABLE = 11,
  CYP_ERR_SYNTHESIS = 12,
  CYP_ERR_BAD_JSON = 13,
  CYP_ERR_UNKNOWN = 14
} cyp_status;

typedef struct cyp_graph cyp_graph;

const char* cyp_last_error_message(void);
void cyp_string_free(char* s);
void cyp_graph_free(cyp_graph* g);

/* construction */
cyp_status cyp_graph_from_circ_json(const char* spec_json, cyp_graph** out);
cyp_status cyp_graph_from_gamma_json(const char* spec_json, cyp_graph** out);
cyp_status cyp_graph_from_word(int n, const char* word, cyp_graph** out);

/* graph queries */
int cyp_graph_vertex_count(const cyp_graph* g);
int cyp_graph_edge_count(const cyp_graph* g);
cyp_status cyp_graph_is_planar(const cyp_graph* g, int* planar);
cyp_status cyp_graph_component_count(const cyp_graph* g, int* count);
cyp_status cyp_graph_simple_underlying(const cyp_graph* g, cyp_graph** out);
cyp_status cyp_graph_contract_edge(const cyp_graph* g, int u, int v, cyp_graph** out);
/* iso: 1 when isomorphic; mapping (length = vertex count) may be NULL */
cyp_status cyp_graph_isomorphic(const cyp_graph* g, const cyp_graph* h, int* iso,
                                int* mapping);
cyp_status cyp_graph_to_dot(const cyp_graph* g, char** out);
cyp_status cyp_graph_to_json(const cyp_graph* g, char** out);

/* circulant graphs */
cyp_status cyp_circ_canonicalize_json(const char* spec_json, char** out_json);
cyp_status cyp_circ_classify_json(const char* spec_json, char** out_json);
cyp_status cyp_circ_components_json(const char* spec_json, char** out_json);

/* two-orbit graphs */
cyp_status cyp_gamma_canonicalize_json(const char* spec_json, char** out_json);
cyp_status cyp_gamma_classify_json(const char* spec_json, int require_regular,
                                   char** out_json);
cyp_status cyp_gamma_components_json(const char* spec_json, char** out_json);
cyp_status cyp_gamma_conditions_json(const char* spec_json, char** out_json);

/* presentation words */
cyp_status cyp_word_parse_json(int n, const char* word, char** out_json);
cyp_status cyp_word_spec_json(int n, const char* word, char** out_json);
cyp_status cyp_word_plan_json(const char* gamma_spec_json, char** out_json);
cyp_status cyp_word_synthesize_json(const char* gamma_spec_json, char** out_json);

/* verification harness; *ok is 1 when there are no disagreements */
cyp_status cyp_verify_theorem_json(int n_min, int n_max, int max_a, int max_b,
                                   int max_q, char** out_json, int* ok);
cyp_status cyp_verify_prop31_json(int n_max, char** out_json, int* ok);
cyp_status cyp_verify_claims_json(const int* n_list, size_t count, char** out_json,
                                  int* ok);

#ifdef __cplusplus
}
#endif

#endif /* CYCPLANAR_H */
