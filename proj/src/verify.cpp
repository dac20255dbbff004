#include "robustgraph/verify.hpp"

#include <algorithm>
#include <unordered_map>

#include "robustgraph/oracle.hpp"
#include "robustgraph/udg_robust.hpp"

namespace robustgraph::verify {
namespace {

using Problem = std::optional<std::string>;

std::string list(std::span<const Vertex> vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "]";
}

Problem distinct_in_range(std::span<const Vertex> vs, std::size_t n) {
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "witness " + list(vs) + " repeats a vertex";
  }
  if (!sorted.empty() && sorted.back() >= n) return "witness " + list(vs) + " is out of range";
  return std::nullopt;
}

}  // namespace

UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> vertices) {
  std::unordered_map<Vertex, Vertex> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index.emplace(vertices[i], static_cast<Vertex>(i));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      const auto it = index.find(w);
      if (it != index.end() && i < it->second) edges.emplace_back(static_cast<Vertex>(i), it->second);
    }
  }
  return build_undirected(vertices.size(), edges);
}

Problem check_witness(const UndirectedGraph& g, const NotInDomain& reject) {
  const auto& w = reject.witness;
  if (auto p = distinct_in_range(w, g.num_vertices())) return p;
  switch (reject.reason) {
    case DomainReason::HighDegreeNoTriangle: {
      if (w.size() < 7) return "HighDegreeNoTriangle witness needs a vertex and six neighbors";
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!oracle::has_edge(g, w[0], w[i])) {
          return std::to_string(w[i]) + " is not a neighbor of " + std::to_string(w[0]);
        }
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          if (oracle::has_edge(g, w[i], w[j])) {
            return "listed neighbors " + std::to_string(w[i]) + " and " + std::to_string(w[j]) +
                   " are adjacent";
          }
        }
      }
      return std::nullopt;
    }
    case DomainReason::NonPlanarTriangleFree: {
      if (w.empty()) return "NonPlanarTriangleFree witness is empty";
      const UndirectedGraph h = induced_subgraph(g, w);
      if (oracle::brute_triangle(h)) return "NonPlanarTriangleFree witness contains a triangle";
      if (reject.planarity == PlanarityFailure::EdgeBound) {
        const std::size_t n = h.num_vertices();
        if (n >= 3 && h.num_edges() > 2 * n - 4) return std::nullopt;
        return "edge-bound certificate does not hold: m <= 2n - 4";
      }
      if (reject.planarity == PlanarityFailure::LeftRightConflict) {
        if (!planarity(h)) return std::nullopt;
        return "witness component tests planar";
      }
      return "NonPlanarTriangleFree verdict without a planarity failure";
    }
    default:
      return "reason " + std::string(to_string(reject.reason)) + " is not valid for undirected input";
  }
}

Problem check_witness(const DirectedGraph& d, const NotInDomain& reject) {
  const auto& w = reject.witness;
  if (auto p = distinct_in_range(w, d.num_vertices())) return p;
  switch (reject.reason) {
    case DomainReason::UniSubgraphCyclic: {
      if (!oracle::is_directed_cycle(d, w)) return "witness " + list(w) + " is not a directed cycle";
      for (std::size_t i = 0; i < w.size(); ++i) {
        const Vertex a = w[i], b = w[(i + 1) % w.size()];
        if (oracle::has_arc(d, b, a)) {
          return "cycle edge " + std::to_string(a) + "->" + std::to_string(b) + " is bidirected";
        }
      }
      return std::nullopt;
    }
    case DomainReason::HighBiDegreeNoTriangle: {
      if (w.size() != 8) return "HighBiDegreeNoTriangle witness needs a vertex and seven neighbors";
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!oracle::has_arc(d, w[0], w[i]) || !oracle::has_arc(d, w[i], w[0])) {
          return std::to_string(w[i]) + " is not a bidirected neighbor of " + std::to_string(w[0]);
        }
        for (std::size_t j = 1; j < w.size(); ++j) {
          if (i != j && oracle::has_arc(d, w[i], w[j])) {
            return "edge " + std::to_string(w[i]) + "->" + std::to_string(w[j]) +
                   " closes a triangle";
          }
        }
      }
      return std::nullopt;
    }
    default:
      return "reason " + std::string(to_string(reject.reason)) + " is not valid for directed input";
  }
}

Problem check_outcome(const UndirectedGraph& g, const TriangleOutcome& outcome) {
  if (const auto* t = std::get_if<Triangle>(&outcome)) {
    const Vertex vs[] = {t->a, t->b, t->c};
    if (auto p = distinct_in_range(vs, g.num_vertices())) return p;
    if (!oracle::has_edge(g, t->a, t->b) || !oracle::has_edge(g, t->b, t->c) ||
        !oracle::has_edge(g, t->c, t->a)) {
      return "reported triangle " + list(vs) + " is missing an edge";
    }
    return std::nullopt;
  }
  if (std::holds_alternative<TriangleFree>(outcome)) {
    if (const auto t = oracle::brute_triangle(g)) {
      const Vertex vs[] = {t->a, t->b, t->c};
      return "reported TriangleFree but oracle found " + list(vs);
    }
    return std::nullopt;
  }
  return check_witness(g, std::get<NotInDomain>(outcome));
}

Problem check_outcome(const UndirectedGraph& g, const GirthOutcome& outcome) {
  if (const auto* girth = std::get_if<Girth>(&outcome)) {
    if (girth->cycle.size() != girth->length) return "witness length differs from reported girth";
    if (!oracle::is_simple_cycle(g, girth->cycle)) {
      return "witness " + list(girth->cycle) + " is not a simple cycle";
    }
    const auto expected = oracle::brute_girth(g);
    if (!expected || *expected != girth->length) {
      return "reported girth " + std::to_string(girth->length) + " but oracle found " +
             (expected ? std::to_string(*expected) : std::string("no cycle"));
    }
    return std::nullopt;
  }
  if (std::holds_alternative<NoCycle>(outcome)) {
    if (const auto expected = oracle::brute_girth(g)) {
      return "reported NoCycle but oracle found girth " + std::to_string(*expected);
    }
    return std::nullopt;
  }
  return check_witness(g, std::get<NotInDomain>(outcome));
}

Problem check_outcome(const DirectedGraph& d, const DirectedTriangleOutcome& outcome) {
  if (const auto* t = std::get_if<DirectedTriangle>(&outcome)) {
    const Vertex vs[] = {t->v, t->u, t->w};
    if (auto p = distinct_in_range(vs, d.num_vertices())) return p;
    if (!oracle::is_directed_cycle(d, vs)) return "reported triangle " + list(vs) + " is missing an edge";
    return std::nullopt;
  }
  if (std::holds_alternative<TriangleFree>(outcome)) {
    if (const auto t = oracle::brute_directed_triangle(d)) {
      const Vertex vs[] = {t->v, t->u, t->w};
      return "reported TriangleFree but oracle found " + list(vs);
    }
    return std::nullopt;
  }
  return check_witness(d, std::get<NotInDomain>(outcome));
}

}  // namespace robustgraph::verify
