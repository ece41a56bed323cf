#include "cyp/planarity.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace cyp {

namespace {

// Left-right planarity test on a simple graph. DFS orientation computes
// lowpoints and nesting depths; a second DFS maintains a stack of
// conflict pairs of return-edge intervals and rejects exactly when the
// constraints admit no left-right partition.
class LeftRightTester {
 public:
  explicit LeftRightTester(const MultiGraph& g)
      : n_(g.vertex_count()), m_(g.edge_count()) {
    adj_.resize(n_);
    int id = 0;
    for (const auto& [u, v] : g.edges()) {
      adj_[u].emplace_back(v, id);
      adj_[v].emplace_back(u, id);
      ++id;
    }
    src_.assign(m_, -1);
    dst_.assign(m_, -1);
    lowpt_.assign(m_, 0);
    lowpt2_.assign(m_, 0);
    nesting_.assign(m_, 0);
    ref_.assign(m_, -1);
    lowpt_edge_.assign(m_, -1);
    stack_bottom_.assign(m_, 0);
    height_.assign(n_, -1);
    parent_edge_.assign(n_, -1);
  }

  bool planar() {
    std::vector<int> roots;
    for (int v = 0; v < n_; ++v) {
      if (height_[v] == -1) {
        height_[v] = 0;
        roots.push_back(v);
        orient(v);
      }
    }
    ordered_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      for (const auto& [w, id] : adj_[v])
        if (src_[id] == v) ordered_[v].emplace_back(w, id);
      std::sort(ordered_[v].begin(), ordered_[v].end(),
                [&](const auto& a, const auto& b) {
                  if (nesting_[a.second] != nesting_[b.second])
                    return nesting_[a.second] < nesting_[b.second];
                  return a.second < b.second;
                });
    }
    for (int r : roots)
      if (!test(r)) return false;
    return true;
  }

 private:
  struct Interval {
    int low = -1;
    int high = -1;
    bool empty() const { return low == -1 && high == -1; }
  };
  struct ConflictPair {
    Interval left, right;
  };

  void orient(int v) {
    const int e = parent_edge_[v];
    for (const auto& [w, id] : adj_[v]) {
      if (src_[id] != -1) continue;
      src_[id] = v;
      dst_[id] = w;
      lowpt_[id] = height_[v];
      lowpt2_[id] = height_[v];
      if (height_[w] == -1) {  // tree edge
        parent_edge_[w] = id;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {  // back edge
        lowpt_[id] = height_[w];
      }
      nesting_[id] = 2 * lowpt_[id];
      if (lowpt2_[id] < height_[v]) nesting_[id] += 1;  // chordal
      if (e != -1) {
        if (lowpt_[id] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[id]);
          lowpt_[e] = lowpt_[id];
        } else if (lowpt_[id] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[id]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[id]);
        }
      }
    }
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool test(int v) {
    const int e = parent_edge_[v];
    const auto& out = ordered_[v];
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
      const int w = out[idx].first;
      const int id = out[idx].second;
      stack_bottom_[id] = stack_.size();
      if (id == parent_edge_[w]) {  // tree edge
        if (!test(w)) return false;
      } else {  // back edge
        lowpt_edge_[id] = id;
        stack_.push_back(ConflictPair{Interval{}, Interval{id, id}});
      }
      if (lowpt_[id] < height_[v]) {  // id has a return edge below v
        if (idx == 0) {
          if (e != -1) lowpt_edge_[e] = lowpt_edge_[id];
        } else if (!merge_constraints(id, e)) {
          return false;
        }
      }
    }
    if (e != -1) {
      const int u = src_[e];
      // drop conflict pairs whose return edges all end at the parent u
      while (!stack_.empty() && lowest(stack_.back()) == height_[u])
        stack_.pop_back();
      if (!stack_.empty()) {
        ConflictPair p = stack_.back();
        stack_.pop_back();
        while (p.left.high != -1 && dst_[p.left.high] == u)
          p.left.high = ref_[p.left.high];
        if (p.left.high == -1 && p.left.low != -1) {  // just emptied
          ref_[p.left.low] = p.right.low;
          p.left.low = -1;
        }
        while (p.right.high != -1 && dst_[p.right.high] == u)
          p.right.high = ref_[p.right.high];
        if (p.right.high == -1 && p.right.low != -1) {
          ref_[p.right.low] = p.left.low;
          p.right.low = -1;
        }
        stack_.push_back(p);
      }
      if (lowpt_[e] < height_[u] && !stack_.empty()) {  // e has a return edge
        const int hl = stack_.back().left.high;
        const int hr = stack_.back().right.high;
        if (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr]))
          ref_[e] = hl;
        else
          ref_[e] = hr;
      }
    }
    return true;
  }

  bool merge_constraints(int ei, int e) {
    ConflictPair p;
    // return edges of ei go to the right side
    do {
      assert(stack_.size() > stack_bottom_[ei]);
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;  // not planar
      if (lowpt_[q.right.low] > lowpt_[e]) {  // merge intervals
        if (p.right.empty())
          p.right.high = q.right.high;
        else
          ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {  // align
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (stack_.size() > stack_bottom_[ei]);
    // conflicting return edges of earlier siblings go to the left side
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) ||
                               conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;  // not planar
      if (p.right.low != -1) ref_[p.right.low] = q.right.high;
      if (q.right.low != -1) p.right.low = q.right.low;
      if (p.left.empty())
        p.left.high = q.left.high;
      else
        ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  int n_;
  int m_;
  std::vector<std::vector<std::pair<int, int>>> adj_;      // (neighbor, edge id)
  std::vector<std::vector<std::pair<int, int>>> ordered_;  // outgoing, by nesting depth
  std::vector<int> src_, dst_;
  std::vector<int> lowpt_, lowpt2_, nesting_;
  std::vector<int> ref_, lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<int> height_, parent_edge_;
  std::vector<ConflictPair> stack_;
};

}  // namespace

bool is_planar(const MultiGraph& g) {
  const MultiGraph s = simple_underlying(g);
  const int v = s.vertex_count();
  const int e = s.edge_count();
  if (v <= 4) return true;
  if (e > 3 * v - 6) return false;
  LeftRightTester tester(s);
  return tester.planar();
}

}  // namespace cyp
