// Left-right planarity test (de Fraysseix-Rosenstiehl criterion in the
// formulation of Brandes). Decision only: no embedding is built, so edge
// sides are not tracked. Both depth-first passes are iterative.

#include <algorithm>
#include <limits>

#include "robustgraph/udg_robust.hpp"

namespace robustgraph {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Interval {
  std::uint32_t low = kNone;
  std::uint32_t high = kNone;
  bool empty() const noexcept { return low == kNone && high == kNone; }
};

struct ConflictPair {
  Interval left;
  Interval right;
  void swap() noexcept { std::swap(left, right); }
};

class LeftRightTest {
 public:
  explicit LeftRightTest(const UndirectedGraph& g)
      : g_(g),
        n_(g.num_vertices()),
        m_(g.num_edges()),
        height_(n_, kNone),
        parent_edge_(n_, kNone),
        component_(n_, kNone),
        source_(m_),
        target_(m_),
        lowpt_(m_),
        lowpt2_(m_),
        nesting_depth_(m_),
        ref_(m_, kNone),
        lowpt_edge_(m_, kNone),
        stack_bottom_(m_, kNone),
        oriented_(m_, false),
        out_(n_),
        test_pos_(n_, 0),
        test_resume_(m_, false) {
    build_incidence();
    pos_.assign(inc_offsets_.begin(), inc_offsets_.end() - 1);
    resume_.assign(inc_.size(), false);
  }

  /// Returns kNone when planar, else the root of a failing component.
  Vertex run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (height_[v] != kNone) continue;
      height_[v] = 0;
      roots_.push_back(v);
      orient(v);
    }
    order_by_nesting_depth();
    for (Vertex r : roots_) {
      if (!test(r)) return r;
    }
    return kNone;
  }

  std::vector<Vertex> component_of(Vertex root) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (component_[v] == root) out.push_back(v);
    }
    return out;
  }

 private:
  struct Incidence {
    Vertex other;
    std::uint32_t edge;
  };

  void build_incidence() {
    inc_offsets_.assign(n_ + 1, 0);
    for (Vertex v = 0; v < n_; ++v) inc_offsets_[v + 1] = inc_offsets_[v] + g_.degree(v);
    inc_.resize(inc_offsets_[n_]);
    std::vector<std::size_t> cursor(inc_offsets_.begin(), inc_offsets_.end() - 1);
    std::uint32_t next = 0;
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g_.neighbors(v)) {
        if (v < w) {
          inc_[cursor[v]++] = {w, next};
          inc_[cursor[w]++] = {v, next};
          ++next;
        }
      }
    }
  }

  // First pass: orient edges along a DFS and compute low points and
  // nesting depths.
  void orient(Vertex root) {
    std::vector<Vertex> stack{root};
    component_[root] = root;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const std::uint32_t e = parent_edge_[v];
      while (pos_[v] < inc_offsets_[v + 1]) {
        const std::size_t slot = pos_[v];
        const auto [w, vw] = inc_[slot];
        if (!resume_[slot]) {
          if (oriented_[vw]) {
            ++pos_[v];
            continue;
          }
          oriented_[vw] = true;
          source_[vw] = v;
          target_[vw] = w;
          out_[v].push_back(vw);
          lowpt_[vw] = height_[v];
          lowpt2_[vw] = height_[v];
          if (height_[w] == kNone) {
            parent_edge_[w] = vw;
            height_[w] = height_[v] + 1;
            component_[w] = root;
            stack.push_back(v);
            stack.push_back(w);
            resume_[slot] = true;
            break;
          }
          lowpt_[vw] = height_[w];
        }

        nesting_depth_[vw] = 2 * lowpt_[vw] + (lowpt2_[vw] < height_[v] ? 1 : 0);

        if (e != kNone) {
          if (lowpt_[vw] < lowpt_[e]) {
            lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
            lowpt_[e] = lowpt_[vw];
          } else if (lowpt_[vw] > lowpt_[e]) {
            lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
          } else {
            lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
          }
        }
        ++pos_[v];
      }
    }
  }

  // Stable bucket sort of every out-list by nesting depth, O(n + m).
  void order_by_nesting_depth() {
    std::uint32_t max_depth = 0;
    for (std::uint32_t e = 0; e < m_; ++e) max_depth = std::max(max_depth, nesting_depth_[e]);
    std::vector<std::size_t> start(std::size_t{max_depth} + 2, 0);
    for (std::uint32_t e = 0; e < m_; ++e) ++start[nesting_depth_[e] + 1];
    for (std::size_t d = 0; d + 1 < start.size(); ++d) start[d + 1] += start[d];
    std::vector<std::uint32_t> sorted(m_);
    for (Vertex v = 0; v < n_; ++v) {
      for (std::uint32_t e : out_[v]) sorted[start[nesting_depth_[e]]++] = e;
    }
    for (auto& list : out_) list.clear();
    for (std::uint32_t e : sorted) out_[source_[e]].push_back(e);
  }

  std::uint32_t top() const { return stack_.empty() ? kNone : stack_.back(); }

  bool conflicting(const Interval& i, std::uint32_t b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  std::uint32_t lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void push(const ConflictPair& p) {
    pairs_.push_back(p);
    stack_.push_back(static_cast<std::uint32_t>(pairs_.size() - 1));
  }

  ConflictPair pop() {
    const ConflictPair p = pairs_[stack_.back()];
    stack_.pop_back();
    return p;
  }

  // Second pass: accumulate left/right constraints on return edges.
  bool test(Vertex root) {
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const std::uint32_t e = parent_edge_[v];
      bool descended = false;
      const auto& adj = out_[v];
      while (test_pos_[v] < adj.size()) {
        const std::uint32_t ei = adj[test_pos_[v]];
        const Vertex w = target_[ei];
        if (!test_resume_[ei]) {
          stack_bottom_[ei] = top();
          if (ei == parent_edge_[w]) {
            stack.push_back(v);
            stack.push_back(w);
            test_resume_[ei] = true;
            descended = true;
            break;
          }
          lowpt_edge_[ei] = ei;
          push(ConflictPair{Interval{}, Interval{ei, ei}});
        }

        if (lowpt_[ei] < height_[v]) {
          if (ei == adj.front()) {
            lowpt_edge_[e] = lowpt_edge_[ei];
          } else if (!add_constraints(ei, e)) {
            return false;
          }
        }
        ++test_pos_[v];
      }
      if (!descended && e != kNone) remove_back_edges(e);
    }
    return true;
  }

  bool add_constraints(std::uint32_t ei, std::uint32_t e) {
    ConflictPair p;
    // Return edges of ei all go to one side.
    do {
      ConflictPair q = pop();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (top() != stack_bottom_[ei]);

    // Return edges of earlier siblings that conflict with ei go opposite.
    while (!stack_.empty() && (conflicting(pairs_[top()].left, ei) ||
                               conflicting(pairs_[top()].right, ei))) {
      ConflictPair q = pop();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else if (p.left.low != kNone) {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }

    if (!(p.left.empty() && p.right.empty())) push(p);
    return true;
  }

  void remove_back_edges(std::uint32_t e) {
    const Vertex u = source_[e];
    while (!stack_.empty() && lowest(pairs_[top()]) == height_[u]) stack_.pop_back();

    if (stack_.empty()) return;
    ConflictPair& p = pairs_[top()];
    while (p.left.high != kNone && target_[p.left.high] == u) p.left.high = ref_[p.left.high];
    if (p.left.high == kNone && p.left.low != kNone) {
      ref_[p.left.low] = p.right.low;
      p.left.low = kNone;
    }
    while (p.right.high != kNone && target_[p.right.high] == u) p.right.high = ref_[p.right.high];
    if (p.right.high == kNone && p.right.low != kNone) {
      ref_[p.right.low] = p.left.low;
      p.right.low = kNone;
    }
  }

  const UndirectedGraph& g_;
  std::size_t n_;
  std::size_t m_;

  std::vector<std::size_t> inc_offsets_;
  std::vector<Incidence> inc_;

  std::vector<std::uint32_t> height_;
  std::vector<std::uint32_t> parent_edge_;
  std::vector<Vertex> component_;
  std::vector<Vertex> roots_;

  std::vector<Vertex> source_;
  std::vector<Vertex> target_;
  std::vector<std::uint32_t> lowpt_;
  std::vector<std::uint32_t> lowpt2_;
  std::vector<std::uint32_t> nesting_depth_;

  std::vector<std::uint32_t> ref_;
  std::vector<std::uint32_t> lowpt_edge_;
  std::vector<std::uint32_t> stack_bottom_;
  std::vector<ConflictPair> pairs_;
  std::vector<std::uint32_t> stack_;

  std::vector<bool> oriented_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::size_t> pos_;
  std::vector<bool> resume_;

  std::vector<std::size_t> test_pos_;
  std::vector<bool> test_resume_;
};

}  // namespace

PlanarityResult planarity_test(const UndirectedGraph& g, bool triangle_free) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  PlanarityResult result;
  if (n < 3) return result;
  const std::size_t bound = triangle_free ? 2 * n - 4 : 3 * n - 6;
  if (m > bound) {
    result.planar = false;
    result.failure = PlanarityFailure::EdgeBound;
    result.component.resize(n);
    for (Vertex v = 0; v < n; ++v) result.component[v] = v;
    return result;
  }
  LeftRightTest lr(g);
  const Vertex failing = lr.run();
  if (failing != kNone) {
    result.planar = false;
    result.failure = PlanarityFailure::LeftRightConflict;
    result.component = lr.component_of(failing);
  }
  return result;
}

}  // namespace robustgraph
