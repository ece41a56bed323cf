#include "cyp/circulant.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cyp/errors.hpp"

namespace cyp {

std::string to_string(CircCase c) {
  switch (c) {
    case CircCase::EmptyOrSingle: return "EMPTY_OR_SINGLE";
    case CircCase::DoubleStep: return "DOUBLE_STEP";
    case CircCase::HalfStep: return "HALF_STEP";
    case CircCase::None: return "NONE";
  }
  return "NONE";
}

CirculantSpec canonicalize_circ(int n, const std::vector<int>& raw) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  std::set<int> folded;
  for (int s : raw) {
    if (s < 0 || s >= n)
      fail(ErrorCode::InvalidArgument,
           "step " + std::to_string(s) + " out of range [0, " + std::to_string(n) + ")");
    if (s % n == 0) continue;
    folded.insert(std::min(s, n - s));
  }
  CirculantSpec spec;
  spec.n = n;
  spec.steps.assign(folded.begin(), folded.end());
  return spec;
}

bool is_canonical_circ(const CirculantSpec& spec) {
  if (spec.n < 1) return false;
  int prev = 0;
  for (int s : spec.steps) {
    if (s <= prev || 2 * s > spec.n) return false;
    prev = s;
  }
  return true;
}

MultiGraph build_circ(const CirculantSpec& spec) {
  if (!is_canonical_circ(spec)) fail(ErrorCode::NotCanonical, "spec is not canonical");
  const int n = spec.n;
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.set_label(i, "u" + std::to_string(i));
  for (int s : spec.steps) {
    if (2 * s == n) {
      for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + s);
    } else {
      for (int i = 0; i < n; ++i) g.add_edge(i, (i + s) % n);
    }
  }
  return g;
}

CircDecomposition circ_components(const CirculantSpec& spec) {
  if (!is_canonical_circ(spec)) fail(ErrorCode::NotCanonical, "spec is not canonical");
  int d = spec.n;  // gcd over the empty step set
  for (int s : spec.steps) d = std::gcd(d, s);
  CircDecomposition out;
  out.d = d;
  out.quotient.n = spec.n / d;
  for (int s : spec.steps) out.quotient.steps.push_back(s / d);
  return out;
}

CircPlanarVerdict classify_circ_planar(const CirculantSpec& spec) {
  if (!is_canonical_circ(spec)) fail(ErrorCode::NotCanonical, "spec is not canonical");
  const int n = spec.n;
  CircPlanarVerdict verdict;
  verdict.connected = circ_components(spec).d == 1;

  if (spec.steps.size() <= 1) {
    verdict.planar = true;
    verdict.planar_case = CircCase::EmptyOrSingle;
    if (!spec.steps.empty()) verdict.s = spec.steps.front();
    return verdict;
  }

  if (spec.steps.size() == 2) {
    // case (ii): the other step is congruent to +-2s and n/(n,s) is even
    for (int s : spec.steps) {  // ascending, so ties pick the smallest anchor
      const int twice = std::min((2 * s) % n, (n - 2 * s % n) % n);
      if (twice == 0) continue;
      const int other = spec.steps[0] == s ? spec.steps[1] : spec.steps[0];
      if (other != twice) continue;
      const int d = std::gcd(n, s);
      if ((n / d) % 2 == 0) {
        verdict.planar = true;
        verdict.planar_case = CircCase::DoubleStep;
        verdict.s = s;
        verdict.d = d;
        return verdict;
      }
    }
    // case (iii): S = {s, n/2} with 2d | s and n/d = 2 mod 4, d = (n/2, s)
    if (n % 2 == 0 && spec.steps[1] == n / 2) {
      const int s = spec.steps[0];
      const int d = std::gcd(n / 2, s);
      if (s % (2 * d) == 0 && (n / d) % 4 == 2) {
        verdict.planar = true;
        verdict.planar_case = CircCase::HalfStep;
        verdict.s = s;
        verdict.d = d;
        return verdict;
      }
    }
  }

  verdict.planar = false;
  verdict.planar_case = CircCase::None;
  return verdict;
}

}  // namespace cyp
