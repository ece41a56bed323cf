#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyp/multigraph.hpp"

namespace cyp {

// circ_n(S): vertices u_0..u_{n-1}, one edge {u_i, u_{i+s}} per residue
// class pair. Canonical specs store min(s, n-s) for each step, so the
// step set is properly given by construction.
struct CirculantSpec {
  int n = 1;
  std::vector<int> steps;  // ascending, each in [1, n/2], pairwise distinct

  bool operator==(const CirculantSpec&) const = default;
};

enum class CircCase { EmptyOrSingle, DoubleStep, HalfStep, None };

std::string to_string(CircCase c);

struct CircPlanarVerdict {
  bool planar = false;
  CircCase planar_case = CircCase::None;
  std::optional<int> s;  // pattern anchor, smallest matching step
  std::optional<int> d;  // the gcd parameter of the matched case
  bool connected = false;
};

struct CircDecomposition {
  int d = 1;
  CirculantSpec quotient;
};

// Drops 0, folds each step to min(s, n-s), merges duplicates. The edge
// set of build_circ is unchanged.
CirculantSpec canonicalize_circ(int n, const std::vector<int>& raw);

bool is_canonical_circ(const CirculantSpec& spec);

MultiGraph build_circ(const CirculantSpec& spec);

// d = gcd(n, steps); the graph is d disjoint copies of the quotient
// circ_{n/d}(S/d). Empty step set gives d = n.
CircDecomposition circ_components(const CirculantSpec& spec);

// Planarity by case analysis:
//   (i)   |S| <= 1
//   (ii)  S = {s, +-2s} with n/d even, d = (n, s)
//   (iii) S = {s, n/2} with 2d | s and n/d = 2 mod 4, d = (n/2, s)
// Requires a canonical spec; throws NotCanonical otherwise.
CircPlanarVerdict classify_circ_planar(const CirculantSpec& spec);

}  // namespace cyp
