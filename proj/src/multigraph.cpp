#include "cyp/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cyp/errors.hpp"

namespace cyp {

MultiGraph::MultiGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) fail(ErrorCode::InvalidArgument, "negative vertex count");
}

void MultiGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count_)
    fail(ErrorCode::InvalidArgument,
         "vertex " + std::to_string(v) + " out of range [0, " +
             std::to_string(vertex_count_) + ")");
}

void MultiGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u > v) std::swap(u, v);
  edges_.emplace_back(u, v);
}

std::vector<Edge> MultiGraph::sorted_edges() const {
  std::vector<Edge> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

int MultiGraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (const auto& [a, b] : edges_) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

bool MultiGraph::has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

int MultiGraph::multiplicity(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u > v) std::swap(u, v);
  int count = 0;
  for (const auto& e : edges_)
    if (e.first == u && e.second == v) ++count;
  return count;
}

std::string MultiGraph::label(int v) const {
  check_vertex(v);
  if (v < static_cast<int>(labels_.size()) && !labels_[v].empty())
    return labels_[v];
  return "v" + std::to_string(v);
}

void MultiGraph::set_label(int v, std::string text) {
  check_vertex(v);
  if (labels_.empty()) labels_.resize(vertex_count_);
  labels_[v] = std::move(text);
}

bool MultiGraph::same_edges(const MultiGraph& other) const {
  return vertex_count_ == other.vertex_count_ &&
         sorted_edges() == other.sorted_edges();
}

MultiGraph simple_underlying(const MultiGraph& g) {
  MultiGraph out(g.vertex_count());
  std::set<Edge> seen;
  for (const auto& e : g.sorted_edges()) {
    if (e.first == e.second) continue;
    if (seen.insert(e).second) out.add_edge(e.first, e.second);
  }
  for (int v = 0; v < g.vertex_count(); ++v) out.set_label(v, g.label(v));
  return out;
}

std::vector<std::vector<int>> components(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> stack{start};
    comp[start] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (comp[w] == -1) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;  // vertices ascending per component; components by smallest member
}

Contraction contract_edge(const MultiGraph& g, int u, int v) {
  if (u == v) fail(ErrorCode::LoopContraction, "cannot contract a loop");
  if (!g.has_edge(u, v))
    fail(ErrorCode::NotAnEdge, "(" + std::to_string(u) + "," +
                                   std::to_string(v) + ") is not an edge");
  const int keep = std::min(u, v);
  const int drop = std::max(u, v);
  std::vector<int> relabel(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i == drop)
      relabel[i] = keep;
    else
      relabel[i] = i - (i > drop ? 1 : 0);
  }
  MultiGraph out(g.vertex_count() - 1);
  bool removed = false;
  for (const auto& [a, b] : g.edges()) {
    if (!removed && ((a == u && b == v) || (a == v && b == u))) {
      removed = true;  // exactly one copy of the contracted edge disappears
      continue;
    }
    out.add_edge(relabel[a], relabel[b]);
  }
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i == drop) continue;
    out.set_label(relabel[i], g.label(i));
  }
  return Contraction{std::move(out), std::move(relabel)};
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_dot(const MultiGraph& g) {
  std::string out = "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out += "  " + dot_quote(g.label(v)) + ";\n";
  for (const auto& [u, v] : g.sorted_edges())
    out += "  " + dot_quote(g.label(u)) + " -- " + dot_quote(g.label(v)) + ";\n";
  out += "}\n";
  return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& vertices) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  std::map<int, int> index;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[i]] = i;
  MultiGraph out(static_cast<int>(verts.size()));
  for (const auto& [u, v] : g.edges()) {
    auto iu = index.find(u);
    auto iv = index.find(v);
    if (iu != index.end() && iv != index.end())
      out.add_edge(iu->second, iv->second);
  }
  for (const auto& [old_v, new_v] : index) out.set_label(new_v, g.label(old_v));
  return out;
}

}  // namespace cyp
