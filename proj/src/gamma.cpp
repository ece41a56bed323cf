#include "cyp/gamma.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cyp/errors.hpp"
#include "cyp/planarity.hpp"

namespace cyp {

namespace {

int fold(int x, int n) {
  x %= n;
  if (x < 0) x += n;
  return std::min(x, (n - x) % n);
}

std::vector<int> canonical_steps(int n, const std::vector<int>& raw, bool strict,
                                 const char* which) {
  std::set<int> folded;
  for (int x : raw) {
    if (x < 0 || x >= n)
      fail(ErrorCode::InvalidArgument, std::string(which) + " step " +
                                           std::to_string(x) + " out of range [0, " +
                                           std::to_string(n) + ")");
    if (x == 0 && strict)
      fail(ErrorCode::ZeroStep,
           std::string("0 in ") + which + " requires the loose constructor");
    folded.insert(std::min(x, (n - x) % n));
  }
  return {folded.begin(), folded.end()};
}

GammaSpec canonicalize_impl(int n, const std::vector<int>& raw_a,
                            const std::vector<int>& raw_b,
                            const std::vector<int>& raw_q, bool strict) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  GammaSpec spec;
  spec.n = n;
  spec.A = canonical_steps(n, raw_a, strict, "A");
  spec.B = canonical_steps(n, raw_b, strict, "B");
  std::set<int> q;
  for (int x : raw_q) {
    if (x < 0 || x >= n)
      fail(ErrorCode::InvalidArgument, "Q element " + std::to_string(x) +
                                           " out of range [0, " + std::to_string(n) + ")");
    q.insert(x);
  }
  spec.Q.assign(q.begin(), q.end());
  return spec;
}

}  // namespace

GammaSpec canonicalize_gamma(int n, const std::vector<int>& raw_a,
                             const std::vector<int>& raw_b,
                             const std::vector<int>& raw_q) {
  return canonicalize_impl(n, raw_a, raw_b, raw_q, true);
}

GammaSpec canonicalize_gamma_loose(int n, const std::vector<int>& raw_a,
                                   const std::vector<int>& raw_b,
                                   const std::vector<int>& raw_q) {
  return canonicalize_impl(n, raw_a, raw_b, raw_q, false);
}

bool is_canonical_gamma(const GammaSpec& spec, bool strict) {
  if (spec.n < 1) return false;
  auto steps_ok = [&](const std::vector<int>& steps) {
    int prev = -1;
    for (int s : steps) {
      if (s <= prev || 2 * s > spec.n) return false;
      if (strict && s == 0) return false;
      prev = s;
    }
    return true;
  };
  if (!steps_ok(spec.A) || !steps_ok(spec.B)) return false;
  int prev = -1;
  for (int q : spec.Q) {
    if (q <= prev || q >= spec.n) return false;
    prev = q;
  }
  return true;
}

MultiGraph build_gamma(const GammaSpec& spec) {
  if (!is_canonical_gamma(spec, false))
    fail(ErrorCode::NotCanonical, "spec is not canonical");
  const int n = spec.n;
  MultiGraph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.set_label(i, "v" + std::to_string(i));
    g.set_label(n + i, "v" + std::to_string(i) + "'");
  }
  auto add_block = [&](const std::vector<int>& steps, int base) {
    for (int s : steps) {
      const int limit = (2 * s == n) ? n / 2 : n;  // the n/2 family is generated once
      for (int i = 0; i < limit; ++i) g.add_edge(base + i, base + (i + s) % n);
    }
  };
  add_block(spec.A, 0);
  add_block(spec.B, n);
  for (int q : spec.Q)
    for (int i = 0; i < n; ++i) g.add_edge(i, n + (i + q) % n);
  return g;
}

GammaDecomposition gamma_components(const GammaSpec& spec) {
  if (!is_canonical_gamma(spec, false))
    fail(ErrorCode::NotCanonical, "spec is not canonical");
  if (spec.Q.empty())
    fail(ErrorCode::EmptyQ,
         "empty Q: the graph is a disjoint union of two circulant graphs");
  const int n = spec.n;
  const int q0 = spec.Q.front();
  int d = n;
  for (int a : spec.A) d = std::gcd(d, a);
  for (int b : spec.B) d = std::gcd(d, b);
  for (int q : spec.Q) d = std::gcd(d, q - q0);
  GammaDecomposition out;
  out.d = d;
  const int m = n / d;
  std::vector<int> qa, qb, qq;
  for (int a : spec.A) qa.push_back(a / d);
  for (int b : spec.B) qb.push_back(b / d);
  for (int q : spec.Q) qq.push_back((q0 + (q - q0) / d) % m);
  out.quotient = canonicalize_impl(m, qa, qb, qq, false);
  return out;
}

// --- classification table ---

namespace {

constexpr StepTerm S1{1, 0};   // s
constexpr StepTerm S2{2, 0};   // 2s
constexpr StepTerm SM1{-1, 0}; // -s (Q offsets only)
constexpr StepTerm H{0, 1};    // n/2
constexpr StepTerm Z{0, 0};    // q itself

std::vector<TableRow> make_table() {
  std::vector<TableRow> rows;
  auto add = [&](const char* id, int cls, std::vector<StepTerm> a,
                 std::vector<StepTerm> b, std::vector<StepTerm> q) {
    rows.push_back(TableRow{id, cls, std::move(a), std::move(b), std::move(q)});
  };
  // Class I: any n, (n,s) = 1
  add("I.1", 1, {S1}, {S1}, {Z, S1});
  add("I.2", 1, {}, {S1}, {Z, S1});
  add("I.3", 1, {S1}, {S1}, {Z});
  add("I.4", 1, {}, {S1}, {Z});
  add("I.5", 1, {}, {}, {Z, S1});
  // Class II: n even, (n,s) = 1
  add("II.1", 2, {S1}, {S2}, {Z, S1, SM1});
  add("II.2", 2, {}, {S1, S2}, {Z, S1, SM1});
  add("II.3", 2, {}, {S1}, {Z, S1, SM1});
  add("II.4", 2, {}, {S2}, {Z, S1, SM1});
  add("II.5", 2, {}, {S1, S2}, {Z});
  add("II.6", 2, {}, {}, {Z, S1, SM1});
  add("II.7", 2, {S1}, {S2}, {Z, S1});
  add("II.8", 2, {}, {S2}, {Z, S1});
  add("II.9", 2, {}, {S1}, {Z, S2});
  add("II.10", 2, {}, {S1, S2}, {Z, S1});
  add("II.11", 2, {S1}, {S2}, {Z});
  add("II.12", 2, {S1, S2}, {S2}, {Z, S2});
  add("II.13", 2, {S1, S2}, {}, {Z, S2});
  add("II.14", 2, {S1, S2}, {S2}, {Z});
  add("II.15", 2, {S1}, {S2}, {Z, S2});
  // Class III: n = 2 mod 4, (n/2,s) = 1, s even
  add("III.1", 3, {S1, H}, {H}, {Z, H});
  add("III.2", 3, {H, S1}, {}, {Z, H});
  add("III.3", 3, {S1}, {}, {Z, H});
  add("III.4", 3, {S1, H}, {H}, {Z});
  add("III.5", 3, {S1}, {H}, {Z, H});
  add("III.6", 3, {S1}, {H}, {Z});
  add("III.7", 3, {S1, H}, {S1}, {Z, S1});
  add("III.8", 3, {S1, H}, {S1}, {Z});
  add("III.9", 3, {S1, H}, {}, {Z});
  add("III.10", 3, {H}, {S1}, {Z, S1});
  add("III.11", 3, {S1, H}, {H}, {Z, S1});
  add("III.12", 3, {S1, H}, {}, {Z, S1});
  add("III.13", 3, {H}, {H}, {Z, S1});
  add("III.14", 3, {H}, {}, {Z, S1});
  return rows;
}

}  // namespace

const std::vector<TableRow>& classification_table() {
  static const std::vector<TableRow> table = make_table();
  return table;
}

std::optional<RowInstance> instantiate_row(const TableRow& row, int n, int q,
                                           int s, MatchOrientation orientation) {
  if (n < 2 || s < 1 || s >= n || q < 0 || q >= n) return std::nullopt;
  if (row.cls == 2 && n % 2 != 0) return std::nullopt;
  if (row.cls == 3 && n % 4 != 2) return std::nullopt;
  if (row.cls == 3) {
    if (s % 2 != 0 || std::gcd(n / 2, s) != 1) return std::nullopt;
  } else if (std::gcd(n, s) != 1) {
    return std::nullopt;
  }

  auto term_value = [&](const StepTerm& t) {
    long long v = static_cast<long long>(t.s_coef) * s +
                  static_cast<long long>(t.half_coef) * (n / 2);
    v %= n;
    if (v < 0) v += n;
    return static_cast<int>(v);
  };

  // A/B elements fold under negation; generation fails if an element hits
  // 0 or two nominal elements land in the same class.
  auto gen_steps = [&](const std::vector<StepTerm>& terms,
                       std::vector<int>& out) {
    std::set<int> seen;
    for (const StepTerm& t : terms) {
      const int v = fold(term_value(t), n);
      if (v == 0) return false;
      if (!seen.insert(v).second) return false;
    }
    out.assign(seen.begin(), seen.end());
    return true;
  };

  RowInstance inst;
  if (!gen_steps(row.a_terms, inst.A) || !gen_steps(row.b_terms, inst.B))
    return std::nullopt;

  std::set<int> qset;
  for (const StepTerm& t : row.q_terms) {
    const int v = (q + term_value(t)) % n;
    if (!qset.insert(v).second) return std::nullopt;
  }
  inst.Q.assign(qset.begin(), qset.end());

  if (orientation == MatchOrientation::Swapped) {
    std::swap(inst.A, inst.B);
    std::set<int> negated;
    for (int x : inst.Q) negated.insert((n - x) % n);
    inst.Q.assign(negated.begin(), negated.end());
  }
  return inst;
}

std::vector<ClassMatch> classify_gamma(const GammaSpec& spec) {
  if (!is_canonical_gamma(spec, true))
    fail(ErrorCode::NotCanonical, "spec is not strict canonical");
  if (spec.Q.empty())
    fail(ErrorCode::EmptyQ, "empty Q: classify through the circulant module");
  std::vector<ClassMatch> matches;
  for (const TableRow& row : classification_table()) {
    bool found = false;
    for (int q = 0; q < spec.n && !found; ++q) {
      for (int s = 1; s < spec.n && !found; ++s) {
        for (MatchOrientation o :
             {MatchOrientation::AsGiven, MatchOrientation::Swapped}) {
          auto inst = instantiate_row(row, spec.n, q, s, o);
          if (!inst) continue;
          if (inst->A == spec.A && inst->B == spec.B && inst->Q == spec.Q) {
            matches.push_back(ClassMatch{row.id, q, s, o});
            found = true;
            break;
          }
        }
      }
    }
  }
  return matches;
}

std::vector<ClassMatch> classify_with_regularity(const GammaSpec& spec) {
  auto matches = classify_gamma(spec);
  const bool regularizable = spec.A.empty() == spec.B.empty();
  if (!regularizable) return {};
  return matches;
}

ConditionReport check_conditions(const GammaSpec& spec) {
  if (!is_canonical_gamma(spec, false))
    fail(ErrorCode::NotCanonical, "spec is not canonical");
  const int n = spec.n;
  ConditionReport report;
  report.c2prime_regularizable = spec.A.empty() == spec.B.empty();
  report.c3a_loopless =
      (spec.A.empty() || spec.A.front() != 0) && (spec.B.empty() || spec.B.front() != 0);
  report.c6_intra_orbit_edge = !spec.A.empty() || !spec.B.empty();
  report.c7_inter_orbit_edge = !spec.Q.empty();
  auto has_unit = [&](const std::vector<int>& steps) {
    return std::any_of(steps.begin(), steps.end(),
                       [&](int x) { return std::gcd(x, n) == 1; });
  };
  report.c8_unit_steps =
      spec.Q.empty() || (has_unit(spec.A) && has_unit(spec.B));

  const MultiGraph g = build_gamma(spec);
  report.c1_planar = is_planar(g);

  // the shift v_i -> v_{i+1}, v'_i -> v'_{i+1}
  auto shift = [&](int v) {
    return v < n ? (v + 1) % n : n + (v - n + 1) % n;
  };
  std::map<Edge, int> multiplicity;
  for (const auto& e : g.edges()) ++multiplicity[e];
  auto shift_edge = [&](const Edge& e) {
    int a = shift(e.first), b = shift(e.second);
    if (a > b) std::swap(a, b);
    return Edge{a, b};
  };
  bool automorphism = true;
  for (const auto& [e, count] : multiplicity) {
    auto it = multiplicity.find(shift_edge(e));
    if (it == multiplicity.end() || it->second != count) {
      automorphism = false;
      break;
    }
  }
  // vertex action is two n-cycles, so it is regular of order n whenever
  // the shift preserves edges
  report.c5_automorphism = automorphism;

  std::set<Edge> remaining;
  for (const auto& [e, count] : multiplicity) remaining.insert(e);
  while (!remaining.empty()) {
    Edge start = *remaining.begin();
    int length = 0;
    Edge cur = start;
    do {
      remaining.erase(cur);
      cur = shift_edge(cur);
      ++length;
    } while (cur != start && length <= 2 * n);
    report.edge_orbit_lengths.push_back(length);
  }
  std::sort(report.edge_orbit_lengths.begin(), report.edge_orbit_lengths.end());
  return report;
}

}  // namespace cyp
