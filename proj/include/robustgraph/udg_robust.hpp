#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "robustgraph/graph.hpp"
#include "robustgraph/outcome.hpp"

namespace robustgraph {

/// Work counters for find_triangle_udg.
struct TriangleCounters {
  /// Neighbor pairs tested for adjacency.
  std::size_t pair_tests = 0;
  /// Adjacency-list entries read by those tests.
  std::size_t entries_scanned = 0;
  /// Largest number of pair tests spent on a single vertex.
  std::size_t max_pair_tests_per_vertex = 0;
  bool high_degree_branch = false;
};

/// Robust triangle finder for the unit-disk-graph domain. O(n) time.
///
/// If some vertex has degree > 5, only the smallest such v is examined: its
/// first min(deg(v), 7) neighbors are tested pairwise. In a unit disk graph
/// any six neighbors of a vertex span an edge, so finding none proves the
/// input is not a unit disk graph. Otherwise every vertex has at most five
/// neighbors and all neighbor pairs are tested with a mark array.
///
/// Triangles are reported apex first: (v, a, b) with a before b in the
/// adjacency order of v.
TriangleOutcome find_triangle_udg(const UndirectedGraph& g, TriangleCounters* counters = nullptr);

/// Robust girth for the unit-disk-graph domain.
///
/// Triangle step first; then a triangle-free graph must be planar (the
/// straight-line embedding of a triangle-free unit disk graph has no
/// crossings), so a planarity failure is a domain rejection. Planar inputs
/// go to planar_girth.
GirthOutcome girth_udg(const UndirectedGraph& g);

struct PlanarityResult {
  bool planar = true;
  PlanarityFailure failure = PlanarityFailure::None;
  /// Vertices of the component that failed; all vertices for EdgeBound.
  std::vector<Vertex> component;
};

/// Left-right planarity test, O(n + m). With `triangle_free` the caller
/// asserts the graph has no triangle, which tightens the edge pre-check to
/// m <= 2n - 4.
PlanarityResult planarity_test(const UndirectedGraph& g, bool triangle_free = false);

inline bool planarity(const UndirectedGraph& g, bool triangle_free = false) {
  return planarity_test(g, triangle_free).planar;
}

/// Exact girth by breadth-first search from every vertex.
///
/// Each search stops expanding once no unseen edge can beat the best cycle
/// found so far, so the cost is O(n * m) in the worst case rather than
/// linear. Correct on any simple graph; the robust pipeline only calls it on
/// planar triangle-free inputs. Returns Girth or NoCycle.
GirthOutcome planar_girth(const UndirectedGraph& g);

}  // namespace robustgraph
