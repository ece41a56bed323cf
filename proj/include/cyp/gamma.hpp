#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyp/multigraph.hpp"

namespace cyp {

// Gamma_n(A,B,Q): vertices v_0..v_{n-1} (indices 0..n-1) and
// v'_0..v'_{n-1} (indices n..2n-1); edges (v_i, v_{i+a}) for a in A,
// (v'_i, v'_{i+b}) for b in B, (v_i, v'_{i+q}) for q in Q, indices mod n.
// A and B are stored canonically (each step folded to min(a, n-a)) and are
// properly given by construction; Q is stored as given. 0 never enters A
// or B through the strict constructor; the loose constructor admits it so
// Whitehead graphs of non-cyclically-reduced words can be represented.
struct GammaSpec {
  int n = 1;
  std::vector<int> A;  // ascending, in [0, n/2]
  std::vector<int> B;  // ascending, in [0, n/2]
  std::vector<int> Q;  // ascending, in [0, n-1]

  bool operator==(const GammaSpec&) const = default;
};

GammaSpec canonicalize_gamma(int n, const std::vector<int>& raw_a,
                             const std::vector<int>& raw_b,
                             const std::vector<int>& raw_q);  // ZeroStep on 0 in A,B
GammaSpec canonicalize_gamma_loose(int n, const std::vector<int>& raw_a,
                                   const std::vector<int>& raw_b,
                                   const std::vector<int>& raw_q);

// Canonical, and 0-free when `strict`.
bool is_canonical_gamma(const GammaSpec& spec, bool strict = true);

MultiGraph build_gamma(const GammaSpec& spec);

struct GammaDecomposition {
  int d = 1;
  GammaSpec quotient;
};

// d = gcd(n, A, B, q - q0 over q in Q) with q0 = min Q; the graph is d
// disjoint copies of the quotient. Throws EmptyQ when Q is empty (such
// specs decompose into two circulant graphs instead).
GammaDecomposition gamma_components(const GammaSpec& spec);

enum class MatchOrientation { AsGiven, Swapped };

// One matched classification-table row together with the parameters that
// regenerate the spec: instantiating class_id at (n, q, s), swapping A/B
// and negating Q when orientation is Swapped, reproduces the input.
struct ClassMatch {
  std::string class_id;  // "I.1" .. "III.14"
  int q = 0;
  int s = 1;
  MatchOrientation orientation = MatchOrientation::AsGiven;

  bool operator==(const ClassMatch&) const = default;
};

// All table rows the spec realizes, in table order, one match per row
// with the lexicographically smallest (q, s). Empty result means the
// graph is not both connected and planar. Requires a strict canonical
// spec with nonempty Q.
std::vector<ClassMatch> classify_gamma(const GammaSpec& spec);

// classify_gamma filtered by the regularizability requirement: either
// A and B both empty or both nonempty; otherwise the list is empty.
std::vector<ClassMatch> classify_with_regularity(const GammaSpec& spec);

struct ConditionReport {
  bool c1_planar = false;
  bool c2prime_regularizable = false;
  bool c3a_loopless = false;
  bool c3b_simple = true;        // by construction
  bool c4_vertex_count = true;   // by construction
  bool c5_automorphism = false;  // index shift is a graph automorphism
  bool c6_intra_orbit_edge = false;
  bool c7_inter_orbit_edge = false;
  bool c8_unit_steps = false;
  std::vector<int> edge_orbit_lengths;  // sorted orbit sizes under the shift
};

ConditionReport check_conditions(const GammaSpec& spec);

// --- classification table machinery (shared with the verify harness) ---

// One nominal element of a generated step set: s_coef*s + half_coef*(n/2).
struct StepTerm {
  int s_coef = 0;
  int half_coef = 0;
};

struct TableRow {
  const char* id;
  int cls;  // 1: any n; 2: n even; 3: n = 2 mod 4, s even; all with the gcd constraint
  std::vector<StepTerm> a_terms;
  std::vector<StepTerm> b_terms;
  std::vector<StepTerm> q_terms;  // offsets added to q
};

const std::vector<TableRow>& classification_table();

struct RowInstance {
  std::vector<int> A, B, Q;
};

// Generates the row at (n, q, s) in the requested orientation, or nullopt
// when the row's constraints fail or a generated set degenerates (an
// element collapses to 0 in A/B, or nominal elements coincide).
std::optional<RowInstance> instantiate_row(const TableRow& row, int n, int q,
                                           int s, MatchOrientation orientation);

}  // namespace cyp
