#include "robustgraph/udg_robust.hpp"

#include <algorithm>
#include <limits>

namespace robustgraph {

std::string_view to_string(DomainReason reason) noexcept {
  switch (reason) {
    case DomainReason::HighDegreeNoTriangle: return "HighDegreeNoTriangle";
    case DomainReason::NonPlanarTriangleFree: return "NonPlanarTriangleFree";
    case DomainReason::UniSubgraphCyclic: return "UniSubgraphCyclic";
    case DomainReason::HighBiDegreeNoTriangle: return "HighBiDegreeNoTriangle";
  }
  return "Unknown";
}

std::string_view to_string(PlanarityFailure failure) noexcept {
  switch (failure) {
    case PlanarityFailure::None: return "None";
    case PlanarityFailure::EdgeBound: return "EdgeBound";
    case PlanarityFailure::LeftRightConflict: return "LeftRightConflict";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kDegreeThreshold = 5;
constexpr std::size_t kProbeNeighbors = 7;

TriangleOutcome probe_high_degree(const UndirectedGraph& g, Vertex v, TriangleCounters& c) {
  c.high_degree_branch = true;
  const auto all = g.neighbors(v);
  const auto probe = all.first(std::min(all.size(), kProbeNeighbors));
  for (std::size_t i = 0; i < probe.size(); ++i) {
    for (std::size_t j = i + 1; j < probe.size(); ++j) {
      ++c.pair_tests;
      if (adjacency_test(g, probe[i], probe[j], c.entries_scanned)) {
        c.max_pair_tests_per_vertex = c.pair_tests;
        return Triangle{v, probe[i], probe[j]};
      }
    }
  }
  c.max_pair_tests_per_vertex = c.pair_tests;
  NotInDomain out{DomainReason::HighDegreeNoTriangle, {v}};
  out.witness.insert(out.witness.end(), probe.begin(), probe.end());
  return out;
}

}  // namespace

TriangleOutcome find_triangle_udg(const UndirectedGraph& g, TriangleCounters* counters) {
  TriangleCounters local;
  TriangleCounters& c = counters ? *counters : local;
  c = TriangleCounters{};
  const std::size_t n = g.num_vertices();

  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > kDegreeThreshold) return probe_high_degree(g, v, c);
  }

  // marker[w] == a  iff  w in N(a). Stale entries always name a vertex whose
  // neighborhood really contains w, so the array never needs clearing.
  std::vector<Vertex> marker(n, std::numeric_limits<Vertex>::max());
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    std::size_t tests = 0;
    for (std::size_t i = 0; i + 1 < nb.size(); ++i) {
      const Vertex a = nb[i];
      for (Vertex w : g.neighbors(a)) marker[w] = a;
      c.entries_scanned += g.degree(a);
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        ++tests;
        if (marker[nb[j]] == a) {
          c.pair_tests += tests;
          c.max_pair_tests_per_vertex = std::max(c.max_pair_tests_per_vertex, tests);
          return Triangle{v, a, nb[j]};
        }
      }
    }
    c.pair_tests += tests;
    c.max_pair_tests_per_vertex = std::max(c.max_pair_tests_per_vertex, tests);
  }
  return TriangleFree{};
}

GirthOutcome girth_udg(const UndirectedGraph& g) {
  const TriangleOutcome tri = find_triangle_udg(g);
  if (const auto* t = std::get_if<Triangle>(&tri)) {
    return Girth{3, {t->a, t->b, t->c}};
  }
  if (const auto* reject = std::get_if<NotInDomain>(&tri)) return *reject;

  PlanarityResult planar = planarity_test(g, /*triangle_free=*/true);
  if (!planar.planar) {
    return NotInDomain{DomainReason::NonPlanarTriangleFree, std::move(planar.component),
                       planar.failure};
  }
  return planar_girth(g);
}

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

struct BfsScratch {
  explicit BfsScratch(std::size_t n) : dist(n, kUnseen), parent(n, kUnseen) { queue.reserve(n); }

  void reset() {
    for (Vertex v : queue) dist[v] = kUnseen;
    queue.clear();
  }

  std::vector<std::uint32_t> dist;
  std::vector<Vertex> parent;
  std::vector<Vertex> queue;
};

struct CycleCandidate {
  std::size_t length = std::numeric_limits<std::size_t>::max();
  Vertex root = 0;
  Vertex u = 0;
  Vertex w = 0;
};

// BFS from `root`, stopping once 2 d(u) + 1 reaches `best.length`.
void search_from(const UndirectedGraph& g, Vertex root, BfsScratch& s, CycleCandidate& best) {
  s.dist[root] = 0;
  s.parent[root] = root;
  s.queue.push_back(root);
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const Vertex u = s.queue[head];
    if (2 * static_cast<std::size_t>(s.dist[u]) + 1 >= best.length) break;
    for (Vertex w : g.neighbors(u)) {
      if (s.dist[w] == kUnseen) {
        s.dist[w] = s.dist[u] + 1;
        s.parent[w] = u;
        s.queue.push_back(w);
      } else if (w != s.parent[u]) {
        const std::size_t len = std::size_t{s.dist[u]} + s.dist[w] + 1;
        if (len < best.length) best = {len, root, u, w};
      }
    }
  }
}

}  // namespace

GirthOutcome planar_girth(const UndirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  BfsScratch s(n);
  CycleCandidate best;
  for (Vertex r = 0; r < n; ++r) {
    if (g.degree(r) < 2) continue;
    search_from(g, r, s, best);
    s.reset();
    if (best.length == 3) break;
  }
  if (best.length == std::numeric_limits<std::size_t>::max()) return NoCycle{};

  // Replay the winning search; BFS order is deterministic, so the tree paths
  // to u and w are the ones that produced the candidate. At the global
  // minimum the two paths meet only at their top, giving a simple cycle.
  CycleCandidate replay;
  search_from(g, best.root, s, replay);
  std::vector<Vertex> up, down;
  Vertex a = best.u, b = best.w;
  while (a != b) {
    if (s.dist[a] >= s.dist[b]) {
      up.push_back(a);
      a = s.parent[a];
    } else {
      down.push_back(b);
      b = s.parent[b];
    }
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return Girth{best.length, std::move(up)};
}

}  // namespace robustgraph
