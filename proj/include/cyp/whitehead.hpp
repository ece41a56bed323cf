#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cyp/gamma.hpp"
#include "cyp/multigraph.hpp"

namespace cyp {

struct Letter {
  int generator = 0;  // in [0, n)
  int sign = 1;       // +1 or -1

  bool operator==(const Letter&) const = default;
};

// P_n(w): the presentation on generators x_0..x_{n-1} whose n relators are
// the cyclic index shifts of the defining word w.
struct CyclicPresentation {
  int n = 1;
  std::vector<Letter> word;  // nonempty

  bool operator==(const CyclicPresentation&) const = default;
};

// Grammar: whitespace-separated tokens `x<digits>`, optionally suffixed
// `^-1` or `^<digits>` (a positive exponent k expands to k copies).
// Throws SyntaxError (with byte offset), IndexOutOfRange, EmptyWord.
CyclicPresentation parse_word(int n, std::string_view text);

std::string word_to_string(const CyclicPresentation& p);

// True iff no cyclically adjacent pair is x x^-1 or x^-1 x.
bool is_cyclically_reduced(const CyclicPresentation& p);

// Whitehead graph on 2n vertices (v_{x_i} at index i, v'_{x_i} at n+i):
// each cyclically adjacent letter pair of w contributes one edge per
// relator shift, so the edge count is n * |w| with multiplicity.
MultiGraph whitehead_graph(const CyclicPresentation& p);

// Step sets read off the cyclic letter pairs of w, canonicalized; the
// loose constructor is used, so 0 enters A or B exactly when w is not
// cyclically reduced.
GammaSpec reduced_whitehead_spec(const CyclicPresentation& p);

// Edge multiplicities that make the graph regular and realizable as a
// Whitehead graph: sum over A equals sum over B, and the weighted step
// sum vanishes mod n.
struct MultiplicityPlan {
  std::map<int, int> m_a, m_b, m_q;
};

// Throws NotRegularizable when exactly one of A, B is empty; EmptyQ when
// Q is empty. Requires a strict spec.
MultiplicityPlan plan_multiplicities(const GammaSpec& spec);

// Builds a cyclically reduced word whose reduced Whitehead spec is
// exactly `spec`, realizing some valid multiplicity plan. Preconditions
// as plan_multiplicities.
CyclicPresentation synthesize_word(const GammaSpec& spec);

}  // namespace cyp
