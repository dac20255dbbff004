#pragma once

// Test-only generators and reference constructions.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "robustgraph/geometry.hpp"
#include "robustgraph/graph.hpp"

namespace robustgraph::testing {

inline std::vector<Edge> sorted_edges(const UndirectedGraph& g) {
  auto e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

inline std::vector<Edge> sorted_edges(const DirectedGraph& d) {
  auto e = d.edges();
  std::sort(e.begin(), e.end());
  return e;
}

/// All pairs with |st|^2 <= (r_s + r_t)^2, i < j.
inline std::vector<Edge> naive_udg_edges(const SiteSet& s) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double dx = s[i].x - s[j].x, dy = s[i].y - s[j].y;
      const double reach = s[i].r + s[j].r;
      if (dx * dx + dy * dy <= reach * reach) out.emplace_back(i, j);
    }
  }
  return out;
}

/// All ordered pairs with |st|^2 <= r_s^2.
inline std::vector<Edge> naive_tg_edges(const SiteSet& s) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      const double dx = s[i].x - s[j].x, dy = s[i].y - s[j].y;
      if (dx * dx + dy * dy <= s[i].r * s[i].r) out.emplace_back(i, j);
    }
  }
  return out;
}

/// Erdos-Renyi G(n, p).
inline UndirectedGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_undirected(n, edges);
}

/// Each ordered pair independently with probability p.
inline DirectedGraph random_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_directed(n, edges);
}

/// Random planar graph: a stacked triangulation (each new vertex placed in
/// a random face of the current one) with each edge kept with probability
/// `keep`, then vertex ids shuffled.
inline UndirectedGraph random_planar_graph(std::size_t n, double keep, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n >= 2) edges.emplace_back(0, 1);
  if (n >= 3) {
    edges.emplace_back(1, 2);
    edges.emplace_back(0, 2);
  }
  std::vector<std::array<Vertex, 3>> faces;
  if (n >= 3) faces = {{0, 1, 2}, {0, 1, 2}};
  for (Vertex v = 3; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    const std::size_t f = pick(rng);
    const auto [a, b, c] = faces[f];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> kept;
  for (auto [u, v] : edges) {
    if (coin(rng)) kept.emplace_back(perm[u], perm[v]);
  }
  return build_undirected(n, kept);
}

inline UndirectedGraph cycle_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return build_undirected(k, edges);
}

inline UndirectedGraph path_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return build_undirected(k, edges);
}

inline UndirectedGraph complete_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  }
  return build_undirected(k, edges);
}

inline UndirectedGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, static_cast<Vertex>(a + j));
  }
  return build_undirected(a + b, edges);
}

inline UndirectedGraph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return build_undirected(rows * cols, edges);
}

/// Unit-disk sites whose graph is triangle-free: candidates from
/// random_sites are kept greedily unless they would close a triangle.
/// May return fewer than `n` sites when the box fills up.
inline SiteSet triangle_free_sites(std::size_t n, double box, std::uint64_t seed) {
  const auto candidates = random_sites(20 * n, box, {1, 1}, seed);
  auto close = [](const Site& a, const Site& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy <= 4.0;
  };
  std::vector<Site> kept;
  std::vector<const Site*> near;
  for (const Site& c : candidates) {
    if (kept.size() == n) break;
    near.clear();
    for (const Site& k : kept) {
      if (close(c, k)) near.push_back(&k);
    }
    bool closes = false;
    for (std::size_t i = 0; i < near.size() && !closes; ++i) {
      for (std::size_t j = i + 1; j < near.size() && !closes; ++j) closes = close(*near[i], *near[j]);
    }
    if (!closes) kept.push_back(c);
  }
  return SiteSet(std::move(kept));
}

}  // namespace robustgraph::testing
