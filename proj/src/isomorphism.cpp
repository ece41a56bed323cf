#include "cyp/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cyp/errors.hpp"

namespace cyp {

namespace {

std::vector<std::vector<int>> neighbor_lists(const MultiGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

// Iterated neighborhood refinement (1-dimensional color refinement).
// Colors are renumbered canonically each round so that color ids are
// comparable across the two graphs.
std::vector<int> stable_colors(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = static_cast<int>(adj[v].size());
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      around.reserve(adj[v].size());
      for (int w : adj[v]) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      sig[v] = {color[v], std::move(around)};
    }
    for (int v = 0; v < n; ++v) palette.emplace(sig[v], 0);
    int next = 0;
    for (auto& [key, id] : palette) id = next++;
    std::vector<int> refined(n);
    for (int v = 0; v < n; ++v) refined[v] = palette.at(sig[v]);
    if (refined == color) break;
    color = std::move(refined);
  }
  return color;
}

struct Matcher {
  const std::vector<std::vector<int>>& ga;
  const std::vector<std::vector<int>>& ha;
  const std::vector<int>& gcolor;
  const std::vector<int>& hcolor;
  std::vector<std::vector<bool>> hadj;
  std::vector<int> order;    // g vertices, rarest color class first
  std::vector<int> mapping;  // g -> h, -1 unset
  std::vector<bool> used;    // h vertices already taken

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < static_cast<int>(used.size()); ++w) {
      if (used[w] || hcolor[w] != gcolor[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int x = order[d];
        const bool in_g =
            std::binary_search(ga[v].begin(), ga[v].end(), x);
        if (in_g != hadj[w][mapping[x]]) ok = false;
      }
      if (!ok) continue;
      mapping[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      mapping[v] = -1;
      used[w] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<IsoCertificate> are_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.vertex_count() > kIsomorphismVertexLimit ||
      h.vertex_count() > kIsomorphismVertexLimit)
    fail(ErrorCode::SizeLimitExceeded,
         "isomorphism search supports at most " +
             std::to_string(kIsomorphismVertexLimit) + " vertices");
  const MultiGraph gs = simple_underlying(g);
  const MultiGraph hs = simple_underlying(h);
  const int n = gs.vertex_count();
  if (n != hs.vertex_count() || gs.edge_count() != hs.edge_count())
    return std::nullopt;
  if (n == 0) return IsoCertificate{{}};

  const auto ga = neighbor_lists(gs);
  const auto ha = neighbor_lists(hs);
  const auto gcolor = stable_colors(ga);
  const auto hcolor = stable_colors(ha);
  {
    std::vector<int> a = gcolor, b = hcolor;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<int> class_size(n + 1, 0);
  for (int v = 0; v < n; ++v) ++class_size[gcolor[v]];
  Matcher m{ga, ha, gcolor, hcolor, {}, {}, {}, {}};
  m.hadj.assign(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : hs.edges()) {
    m.hadj[u][v] = true;
    m.hadj[v][u] = true;
  }
  m.order.resize(n);
  std::iota(m.order.begin(), m.order.end(), 0);
  std::sort(m.order.begin(), m.order.end(), [&](int a, int b) {
    if (class_size[gcolor[a]] != class_size[gcolor[b]])
      return class_size[gcolor[a]] < class_size[gcolor[b]];
    return a < b;
  });
  m.mapping.assign(n, -1);
  m.used.assign(n, false);
  if (!m.extend(0)) return std::nullopt;
  return IsoCertificate{std::move(m.mapping)};
}

bool certificate_valid(const MultiGraph& g, const MultiGraph& h,
                       const IsoCertificate& cert) {
  const MultiGraph gs = simple_underlying(g);
  const MultiGraph hs = simple_underlying(h);
  const int n = gs.vertex_count();
  if (n != hs.vertex_count()) return false;
  if (static_cast<int>(cert.mapping.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int image : cert.mapping) {
    if (image < 0 || image >= n || hit[image]) return false;
    hit[image] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(gs.edges().size());
  for (const auto& [u, v] : gs.edges()) {
    int a = cert.mapping[u];
    int b = cert.mapping[v];
    if (a > b) std::swap(a, b);
    mapped.emplace_back(a, b);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == hs.sorted_edges();
}

}  // namespace cyp
