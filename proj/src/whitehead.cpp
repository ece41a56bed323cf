#include "cyp/whitehead.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>

#include "cyp/errors.hpp"

namespace cyp {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

CyclicPresentation parse_word(int n, std::string_view text) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  CyclicPresentation p;
  p.n = n;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string_view token = text.substr(start, pos - start);

    if (token[0] != 'x') throw ParseError("expected token of the form x<k>", start);
    std::string_view rest = token.substr(1);
    std::string_view index_part = rest;
    std::string_view exp_part;
    if (auto caret = rest.find('^'); caret != std::string_view::npos) {
      index_part = rest.substr(0, caret);
      exp_part = rest.substr(caret + 1);
    }
    if (!all_digits(index_part))
      throw ParseError("expected generator index after 'x'", start);
    long generator = 0;
    try {
      generator = std::stol(std::string(index_part));
    } catch (const std::out_of_range&) {
      throw ParseError("generator index out of range", start);
    }
    if (generator >= n)
      fail(ErrorCode::IndexOutOfRange,
           "generator x" + std::to_string(generator) + " out of range for n = " +
               std::to_string(n));
    int sign = 1;
    long count = 1;
    if (!exp_part.empty() || token.find('^') != std::string_view::npos) {
      if (exp_part == "-1") {
        sign = -1;
      } else if (all_digits(exp_part)) {
        try {
          count = std::stol(std::string(exp_part));
        } catch (const std::out_of_range&) {
          throw ParseError("exponent out of range", start);
        }
        if (count == 0) throw ParseError("exponent 0 is not allowed", start);
      } else {
        throw ParseError("exponent must be -1 or a positive integer", start);
      }
    }
    for (long i = 0; i < count; ++i)
      p.word.push_back(Letter{static_cast<int>(generator), sign});
  }
  if (p.word.empty()) fail(ErrorCode::EmptyWord, "empty defining word");
  return p;
}

std::string word_to_string(const CyclicPresentation& p) {
  std::string out;
  for (const Letter& l : p.word) {
    if (!out.empty()) out.push_back(' ');
    out += "x" + std::to_string(l.generator);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

bool is_cyclically_reduced(const CyclicPresentation& p) {
  const std::size_t len = p.word.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Letter& a = p.word[i];
    const Letter& b = p.word[(i + 1) % len];
    if (a.generator == b.generator && a.sign != b.sign) return false;
  }
  return true;
}

namespace {

// head of a letter: the vertex its leading end touches; tail: trailing end.
// A cyclic pair u t contributes the edge {head(u), tail(t)} in one relator.
int head_vertex(const Letter& l, int n) {
  return l.sign > 0 ? l.generator : n + l.generator;
}
int tail_vertex(const Letter& l, int n) {
  return l.sign > 0 ? n + l.generator : l.generator;
}

}  // namespace

MultiGraph whitehead_graph(const CyclicPresentation& p) {
  const int n = p.n;
  MultiGraph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.set_label(i, "v" + std::to_string(i));
    g.set_label(n + i, "v" + std::to_string(i) + "'");
  }
  const std::size_t len = p.word.size();
  auto shifted = [&](int v, int k) {
    return v < n ? (v + k) % n : n + (v - n + k) % n;
  };
  for (std::size_t i = 0; i < len; ++i) {
    const int h = head_vertex(p.word[i], n);
    const int t = tail_vertex(p.word[(i + 1) % len], n);
    for (int k = 0; k < n; ++k) g.add_edge(shifted(h, k), shifted(t, k));
  }
  return g;
}

GammaSpec reduced_whitehead_spec(const CyclicPresentation& p) {
  const int n = p.n;
  std::vector<int> a, b, q;
  const std::size_t len = p.word.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Letter& u = p.word[i];
    const Letter& t = p.word[(i + 1) % len];
    const int diff = ((t.generator - u.generator) % n + n) % n;
    if (u.sign > 0 && t.sign < 0) {
      a.push_back(diff);
    } else if (u.sign < 0 && t.sign > 0) {
      b.push_back(diff);
    } else if (u.sign > 0 && t.sign > 0) {
      q.push_back(diff);
    } else {  // both negative: the reverse reading of a positive pair
      q.push_back((n - diff) % n);
    }
  }
  return canonicalize_gamma_loose(n, a, b, q);
}

MultiplicityPlan plan_multiplicities(const GammaSpec& spec) {
  if (!is_canonical_gamma(spec, true))
    fail(ErrorCode::NotCanonical, "spec is not strict canonical");
  if (spec.Q.empty()) fail(ErrorCode::EmptyQ, "empty Q");
  if (spec.A.empty() != spec.B.empty())
    fail(ErrorCode::NotRegularizable,
         "exactly one of A, B is empty: the graph cannot be made regular");
  const int n = spec.n;
  MultiplicityPlan plan;
  for (int a : spec.A) plan.m_a[a] = 1;
  for (int b : spec.B) plan.m_b[b] = 1;
  for (int q : spec.Q) plan.m_q[q] = 1;

  // balance: top up one element of the smaller side
  const int size_a = static_cast<int>(spec.A.size());
  const int size_b = static_cast<int>(spec.B.size());
  if (size_a > size_b && size_b > 0) plan.m_b[spec.B.front()] += size_a - size_b;
  if (size_b > size_a && size_a > 0) plan.m_a[spec.A.front()] += size_b - size_a;

  auto weighted_sum = [&]() {
    long long total = 0;
    for (const auto& [a, m] : plan.m_a) total += static_cast<long long>(a) * m;
    for (const auto& [b, m] : plan.m_b) total += static_cast<long long>(b) * m;
    for (const auto& [q, m] : plan.m_q) total += static_cast<long long>(q) * m;
    return static_cast<int>(total % n);
  };

  int t = weighted_sum();
  if (t != 0) {
    bool fixed = false;
    // a bump of one q leaves the balance untouched
    for (int delta = 1; delta <= n && !fixed; ++delta) {
      for (int q : spec.Q) {
        if ((t + static_cast<long long>(q) * delta) % n == 0) {
          plan.m_q[q] += delta;
          fixed = true;
          break;
        }
      }
    }
    // a paired bump of one a and one b keeps the balance
    for (int delta = 1; delta <= n && !fixed; ++delta) {
      for (int a : spec.A) {
        for (int b : spec.B) {
          if ((t + static_cast<long long>(a + b) * delta) % n == 0) {
            plan.m_a[a] += delta;
            plan.m_b[b] += delta;
            fixed = true;
            break;
          }
        }
        if (fixed) break;
      }
    }
    if (!fixed) {  // scaling every multiplicity by n always lands on 0 mod n
      for (auto& [k, m] : plan.m_a) m *= n;
      for (auto& [k, m] : plan.m_b) m *= n;
      for (auto& [k, m] : plan.m_q) m *= n;
    }
  }
  assert(weighted_sum() == 0);
  return plan;
}

CyclicPresentation synthesize_word(const GammaSpec& spec) {
  const MultiplicityPlan plan = plan_multiplicities(spec);
  const int n = spec.n;

  // Typed cyclic adjacencies, arranged so letter signs agree where
  // consecutive pairs share a letter: an A pair is (+,-), a B pair is
  // (-,+), a Q pair realized positively is (+,+). The arrangement
  // A B A B ... A B Q Q ... Q is sign-consistent around the cycle, so the
  // whole multiset forms a single closed trail in the letter digraph and
  // the word is read straight off it.
  enum class Kind { A, B, Q };
  struct Step {
    Kind kind;
    int value;
  };
  std::vector<Step> a_steps, b_steps, q_steps;
  for (const auto& [a, m] : plan.m_a)
    for (int i = 0; i < m; ++i) a_steps.push_back({Kind::A, a});
  for (const auto& [b, m] : plan.m_b)
    for (int i = 0; i < m; ++i) b_steps.push_back({Kind::B, b});
  for (const auto& [q, m] : plan.m_q)
    for (int i = 0; i < m; ++i) q_steps.push_back({Kind::Q, q});
  assert(a_steps.size() == b_steps.size());

  std::vector<Step> sequence;
  for (std::size_t i = 0; i < a_steps.size(); ++i) {
    sequence.push_back(a_steps[i]);
    sequence.push_back(b_steps[i]);
  }
  sequence.insert(sequence.end(), q_steps.begin(), q_steps.end());

  CyclicPresentation p;
  p.n = n;
  int g = 0;
  for (const Step& step : sequence) {
    p.word.push_back(Letter{g, step.kind == Kind::B ? -1 : 1});
    g = (g + step.value) % n;
  }
  if (g != 0)
    fail(ErrorCode::SynthesisFailed,
         "constructed trail does not close");  // unreachable for valid plans
  return p;
}

}  // namespace cyp
