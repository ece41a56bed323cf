#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cyp/gamma.hpp"

namespace cyp {

struct EnumerationBounds {
  int n_min = 2;
  int n_max = 10;
  int max_a = 3;
  int max_b = 3;
  int max_q = 4;
};

struct Disagreement {
  GammaSpec spec;
  bool oracle = false;      // the graph-level verdict
  bool classifier = false;  // the table-level verdict
  std::string note;
};

struct VerificationReport {
  long long specs_checked = 0;
  std::vector<Disagreement> disagreements;
  double elapsed_seconds = 0.0;

  bool ok() const { return disagreements.empty(); }
};

// Deterministic enumeration of canonical strict specs with nonempty Q:
// A and B run over subsets of {1..n/2} and Q over subsets of {0..n-1} in
// lexicographic order of their element lists.
void for_each_canonical_spec(const EnumerationBounds& bounds,
                             const std::function<void(const GammaSpec&)>& fn);

// Exhaustive comparison of the table classifier against the graph oracle
// (connected and planar) over the bounds.
VerificationReport verify_theorem_A(const EnumerationBounds& bounds);

// The ten non-planar families, each checked for every valid n in [4, n_max].
VerificationReport verify_prop31(int n_max);

// Named single claims, for each even n in the list:
//  (a) specs passing connectivity plus conditions (1)-(8) are exactly the
//      specs classifying as I.1 or I.3;
//  (b) the reduced Whitehead spec of P_n(x0 x1 x2^-1) classifies as II.11;
//  (c) P_n(x1 (x2^-1 x0)^l) classifies as II.14 for l >= 2 and as II.11
//      for l = 1;
//  (d) Gamma_n({s},{s},{q}) is isomorphic to
//      Gamma_n({},{},{q,q+s,q-s}) for gcd(n,s) = 1.
VerificationReport verify_named_claims(const std::vector<int>& n_list);

}  // namespace cyp
