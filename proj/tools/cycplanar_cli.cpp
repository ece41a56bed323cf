// Batch front end over the shared C API. Machine output (JSON or DOT)
// goes to stdout, diagnostics to stderr. Exit codes: 0 success, 1 failed
// verification, 2 usage or input errors.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycplanar.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int max_n_cap() {
  const char* env = std::getenv("GAMMA_MAX_N");
  if (env == nullptr || *env == '\0') return 16;
  try {
    return std::stoi(env);
  } catch (...) {
    std::cerr << "warning: ignoring unparsable GAMMA_MAX_N\n";
    return 16;
  }
}

[[noreturn]] void die(const std::string& reason) {
  std::cerr << "error: " << reason << "\n";
  std::exit(kExitUsage);
}

void check_cap(int n) {
  const int cap = max_n_cap();
  if (n > cap)
    die("n = " + std::to_string(n) + " exceeds GAMMA_MAX_N = " + std::to_string(cap));
}

std::string take(char* owned) {
  std::string out = owned == nullptr ? "" : owned;
  cyp_string_free(owned);
  return out;
}

void check(cyp_status status) {
  if (status != CYP_OK) die(cyp_last_error_message());
}

std::string int_array(const std::vector<int>& values) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ",";
    out << values[i];
  }
  out << "]";
  return out.str();
}

std::string circ_json(int n, const std::vector<int>& steps) {
  return "{\"n\":" + std::to_string(n) + ",\"S\":" + int_array(steps) + "}";
}

std::string gamma_json(int n, const std::vector<int>& a, const std::vector<int>& b,
                       const std::vector<int>& q) {
  return "{\"n\":" + std::to_string(n) + ",\"A\":" + int_array(a) +
         ",\"B\":" + int_array(b) + ",\"Q\":" + int_array(q) + "}";
}

void emit_graph(cyp_graph* graph, bool dot) {
  char* text = nullptr;
  check(dot ? cyp_graph_to_dot(graph, &text) : cyp_graph_to_json(graph, &text));
  cyp_graph_free(graph);
  std::cout << take(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphs with cyclic symmetry: construction, planarity "
               "classification, and presentation words"};
  app.require_subcommand(1);

  int n = 0;
  std::vector<int> set_a, set_b, set_q, set_s;
  std::string word;
  bool dot = false;
  bool json = false;
  bool regular = false;

  auto add_format_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "emit JSON (default)");
    cmd->add_flag("--dot", dot, "emit DOT instead of JSON");
  };
  auto add_gamma_flags = [&](CLI::App* cmd, bool with_dot) {
    cmd->add_option("--n", n, "modulus")->required();
    cmd->add_option("--A", set_a, "step in A (repeatable)");
    cmd->add_option("--B", set_b, "step in B (repeatable)");
    cmd->add_option("--Q", set_q, "offset in Q (repeatable)");
    if (with_dot) add_format_flags(cmd);
  };

  auto* gamma = app.add_subcommand("gamma", "two-orbit graphs");
  auto* gamma_build = gamma->add_subcommand("build", "construct the graph");
  auto* gamma_classify = gamma->add_subcommand("classify", "match table rows");
  auto* gamma_components = gamma->add_subcommand("components", "gcd decomposition");
  auto* gamma_conditions = gamma->add_subcommand("conditions", "condition report");
  add_gamma_flags(gamma_build, true);
  add_gamma_flags(gamma_classify, false);
  gamma_classify->add_flag("--regular", regular,
                           "require the regularizability condition");
  add_gamma_flags(gamma_components, false);
  add_gamma_flags(gamma_conditions, false);

  auto* circ = app.add_subcommand("circ", "circulant graphs");
  auto* circ_build = circ->add_subcommand("build", "construct the graph");
  auto* circ_classify = circ->add_subcommand("classify", "planarity verdict");
  auto* circ_components = circ->add_subcommand("components", "gcd decomposition");
  for (auto* cmd : {circ_build, circ_classify, circ_components}) {
    cmd->add_option("--n", n, "modulus")->required();
    cmd->add_option("--S", set_s, "step (repeatable)");
  }
  add_format_flags(circ_build);

  auto* wh = app.add_subcommand("whitehead", "presentation words");
  auto* wh_parse = wh->add_subcommand("parse", "parse a defining word");
  auto* wh_graph = wh->add_subcommand("graph", "Whitehead graph of the word");
  auto* wh_spec = wh->add_subcommand("spec", "reduced Whitehead step sets");
  auto* wh_plan = wh->add_subcommand("plan", "edge multiplicity plan");
  auto* wh_synthesize = wh->add_subcommand("synthesize", "word realizing a spec");
  for (auto* cmd : {wh_parse, wh_graph, wh_spec}) {
    cmd->add_option("--n", n, "generator count")->required();
    cmd->add_option("--word", word, "defining word, e.g. \"x0 x1 x2^-1\"")->required();
  }
  add_format_flags(wh_graph);
  add_gamma_flags(wh_plan, false);
  add_gamma_flags(wh_synthesize, false);

  int n_min = 2, n_max = 10, max_a = 3, max_b = 3, max_q = 4;
  std::vector<int> claim_ns;
  auto* verify = app.add_subcommand("verify", "theorem checking harness");
  auto* verify_theorem = verify->add_subcommand(
      "theorem", "classifier vs. oracle over all specs in bounds");
  verify_theorem->add_option("--n-min", n_min, "smallest n (default 2)");
  verify_theorem->add_option("--n-max", n_max, "largest n (default 10)");
  verify_theorem->add_option("--max-a", max_a, "largest |A| (default 3)");
  verify_theorem->add_option("--max-b", max_b, "largest |B| (default 3)");
  verify_theorem->add_option("--max-q", max_q, "largest |Q| (default 4)");
  auto* verify_prop31 = verify->add_subcommand("prop31", "non-planar families");
  int prop_n_max = 16;
  verify_prop31->add_option("--n-max", prop_n_max, "largest n (default 16)");
  auto* verify_claims = verify->add_subcommand("claims", "named single claims");
  verify_claims->add_option("--n", claim_ns, "even n (repeatable, default 4 6 8 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (dot && json) die("--dot and --json are mutually exclusive");

  char* out = nullptr;
  int ok = 1;

  if (gamma_build->parsed() || gamma_classify->parsed() ||
      gamma_components->parsed() || gamma_conditions->parsed()) {
    check_cap(n);
    const std::string spec = gamma_json(n, set_a, set_b, set_q);
    if (gamma_build->parsed()) {
      cyp_graph* graph = nullptr;
      check(cyp_graph_from_gamma_json(spec.c_str(), &graph));
      emit_graph(graph, dot);
      return kExitOk;
    }
    if (gamma_classify->parsed())
      check(cyp_gamma_classify_json(spec.c_str(), regular ? 1 : 0, &out));
    else if (gamma_components->parsed())
      check(cyp_gamma_components_json(spec.c_str(), &out));
    else
      check(cyp_gamma_conditions_json(spec.c_str(), &out));
    std::cout << take(out);
    return kExitOk;
  }

  if (circ_build->parsed() || circ_classify->parsed() || circ_components->parsed()) {
    check_cap(n);
    const std::string spec = circ_json(n, set_s);
    if (circ_build->parsed()) {
      cyp_graph* graph = nullptr;
      check(cyp_graph_from_circ_json(spec.c_str(), &graph));
      emit_graph(graph, dot);
      return kExitOk;
    }
    if (circ_classify->parsed())
      check(cyp_circ_classify_json(spec.c_str(), &out));
    else
      check(cyp_circ_components_json(spec.c_str(), &out));
    std::cout << take(out);
    return kExitOk;
  }

  if (wh_parse->parsed() || wh_graph->parsed() || wh_spec->parsed()) {
    check_cap(n);
    if (wh_graph->parsed()) {
      cyp_graph* graph = nullptr;
      check(cyp_graph_from_word(n, word.c_str(), &graph));
      emit_graph(graph, dot);
      return kExitOk;
    }
    if (wh_parse->parsed())
      check(cyp_word_parse_json(n, word.c_str(), &out));
    else
      check(cyp_word_spec_json(n, word.c_str(), &out));
    std::cout << take(out);
    return kExitOk;
  }

  if (wh_plan->parsed() || wh_synthesize->parsed()) {
    check_cap(n);
    const std::string spec = gamma_json(n, set_a, set_b, set_q);
    if (wh_plan->parsed())
      check(cyp_word_plan_json(spec.c_str(), &out));
    else
      check(cyp_word_synthesize_json(spec.c_str(), &out));
    std::cout << take(out);
    return kExitOk;
  }

  if (verify_theorem->parsed()) {
    check_cap(n_max);
    check(cyp_verify_theorem_json(n_min, n_max, max_a, max_b, max_q, &out, &ok));
  } else if (verify_prop31->parsed()) {
    check_cap(prop_n_max);
    check(cyp_verify_prop31_json(prop_n_max, &out, &ok));
  } else if (verify_claims->parsed()) {
    if (claim_ns.empty()) claim_ns = {4, 6, 8, 10};
    for (int v : claim_ns) check_cap(v);
    check(cyp_verify_claims_json(claim_ns.data(), claim_ns.size(), &out, &ok));
  } else {
    die("unknown sub-command");
  }
  std::cout << take(out);
  if (!ok) {
    std::cerr << "verification found disagreements\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
