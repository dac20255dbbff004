#include "robustgraph/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace robustgraph::oracle {

OracleSizeError::OracleSizeError(std::size_t n, std::size_t cap)
    : std::length_error("oracle input has " + std::to_string(n) + " vertices; cap is " +
                        std::to_string(cap)) {}

namespace {

void check_size(std::size_t n, std::size_t cap = kMaxVertices) {
  if (n > cap) throw OracleSizeError(n, cap);
}

template <class G, class Lists>
std::vector<std::vector<Vertex>> sorted_lists(const G& g, Lists&& lists) {
  std::vector<std::vector<Vertex>> out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto l = lists(v);
    out[v].assign(l.begin(), l.end());
    std::sort(out[v].begin(), out[v].end());
  }
  return out;
}

}  // namespace

bool has_edge(const UndirectedGraph& g, Vertex u, Vertex v) {
  const auto l = g.neighbors(u);
  return std::find(l.begin(), l.end(), v) != l.end();
}

bool has_arc(const DirectedGraph& d, Vertex from, Vertex to) {
  const auto l = d.successors(from);
  return std::find(l.begin(), l.end(), to) != l.end();
}

std::optional<Triangle> brute_triangle(const UndirectedGraph& g) {
  check_size(g.num_vertices());
  const auto adj = sorted_lists(g, [&](Vertex v) { return g.neighbors(v); });
  std::vector<bool> in_a(g.num_vertices(), false);
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    for (Vertex x : adj[a]) in_a[x] = true;
    for (Vertex b : adj[a]) {
      if (b <= a) continue;
      for (Vertex c : adj[b]) {
        if (c > b && in_a[c]) return Triangle{a, b, c};
      }
    }
    for (Vertex x : adj[a]) in_a[x] = false;
  }
  return std::nullopt;
}

std::optional<std::size_t> brute_girth(const UndirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  check_size(n);
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInf;
  std::vector<std::size_t> dist(n);
  std::vector<std::size_t> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), kInf);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kInf) return std::nullopt;
  return best;
}

std::optional<DirectedTriangle> brute_directed_triangle(const DirectedGraph& d) {
  check_size(d.num_vertices());
  const auto out = sorted_lists(d, [&](Vertex v) { return d.successors(v); });
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    for (Vertex u : out[v]) {
      for (Vertex w : out[u]) {
        if (w != v && std::binary_search(out[w].begin(), out[w].end(), v)) {
          return DirectedTriangle{v, u, w};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Extends simple paths from `start` through vertices larger than `start`;
// each cycle is found once per direction.
void extend(const UndirectedGraph& g, Vertex start, Vertex at, std::size_t length,
            std::vector<bool>& on_path, std::size_t& best) {
  for (Vertex next : g.neighbors(at)) {
    if (next == start && length >= 3) {
      best = std::min(best, length);
    } else if (next > start && !on_path[next]) {
      on_path[next] = true;
      extend(g, start, next, length + 1, on_path, best);
      on_path[next] = false;
    }
  }
}

}  // namespace

std::optional<std::size_t> girth_by_cycle_enumeration(const UndirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  check_size(n, 12);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<bool> on_path(n, false);
  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = true;
    extend(g, s, s, 1, on_path, best);
    on_path[s] = false;
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

bool is_simple_cycle(const UndirectedGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) return false;
  std::vector<Vertex> seen(cycle.begin(), cycle.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  if (seen.back() >= g.num_vertices()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!has_edge(g, cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

bool is_directed_cycle(const DirectedGraph& d, std::span<const Vertex> cycle) {
  if (cycle.size() < 2) return false;
  std::vector<Vertex> seen(cycle.begin(), cycle.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  if (seen.back() >= d.num_vertices()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!has_arc(d, cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace robustgraph::oracle
