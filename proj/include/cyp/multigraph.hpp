#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cyp {

// Endpoint pair of an undirected edge, normalized so first <= second.
using Edge = std::pair<int, int>;

// Undirected labeled multigraph with loop support. Vertices are dense
// indices [0, vertex_count). Values are immutable once built; every
// operation below is a pure function over const references.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  void add_edge(int u, int v);

  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Edge> sorted_edges() const;

  // Loops contribute 2 to the degree of their vertex.
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  int multiplicity(int u, int v) const;

  std::string label(int v) const;  // defaults to "v<index>" when unset
  void set_label(int v, std::string text);

  // Same vertex count and same edge multiset (labels ignored).
  bool same_edges(const MultiGraph& other) const;

 private:
  void check_vertex(int v) const;

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;  // empty until a label is set
};

// Loops dropped, parallel edges collapsed to one; vertex set unchanged.
MultiGraph simple_underlying(const MultiGraph& g);

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<std::vector<int>> components(const MultiGraph& g);

struct Contraction {
  MultiGraph graph;
  std::vector<int> relabeling;  // old vertex index -> new vertex index
};

// Merges the endpoints of one (u,v) edge. Parallel copies of (u,v) become
// loops, other parallel edges are retained. Throws NotAnEdge or
// LoopContraction.
Contraction contract_edge(const MultiGraph& g, int u, int v);

// Deterministic DOT source: one line per vertex, one per multiedge,
// edges sorted by endpoint pair.
std::string to_dot(const MultiGraph& g);

// Subgraph induced by the given vertices, relabeled densely in the order
// of the (sorted) vertex list.
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& vertices);

}  // namespace cyp
