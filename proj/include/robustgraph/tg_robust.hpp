#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "robustgraph/graph.hpp"
#include "robustgraph/outcome.hpp"

namespace robustgraph {

/// Edges (v, u) of `d` with u not a bidirected neighbor of v.
DirectedGraph uni_subgraph(const DirectedGraph& d, const BiNeighborTable& bi);

struct Acyclic {};

/// A simple directed cycle, rotated to start at its smallest vertex.
struct Cycle {
  std::vector<Vertex> vertices;
};

using AcyclicityResult = std::variant<Acyclic, Cycle>;

/// In-degree peeling; if vertices remain, walks predecessor links inside
/// the residue until a vertex repeats and returns that cycle.
AcyclicityResult acyclicity_check(const DirectedGraph& d);

struct DirectedTriangleCounters {
  /// Merge-intersections run in the bidirected-edge stage.
  std::size_t intersections = 0;
  /// List entries read by those intersections.
  std::size_t entries_scanned = 0;
  /// Largest number of times one forward or backward list was traversed in
  /// that stage, including the one setup pass that builds it.
  std::size_t max_list_traversals = 0;
  bool high_bidegree_branch = false;
};

/// Robust directed-triangle finder for the transmission-graph domain.
/// O(n + m) including the sorted-list preprocessing.
///
/// If some v has more than six bidirected neighbors, the smallest such v and
/// seven of them are examined: in a transmission graph two of them must be
/// joined, closing a triangle through v. Otherwise bidirected degrees are at
/// most six. A directed cycle free of bidirected edges cannot occur in a
/// transmission graph (the smallest-radius site on a cycle reaches its
/// successor, which reaches back), so a cycle in the unidirectional subgraph
/// is a rejection; if it is acyclic, every triangle has a bidirected edge
/// v -> u and is found by intersecting in(v) with out(u).
///
/// The rejection happens when the unidirectional subgraph has a cycle and
/// the search proceeds when it is acyclic.
DirectedTriangleOutcome find_directed_triangle(const DirectedGraph& d,
                                               DirectedTriangleCounters* counters = nullptr);

}  // namespace robustgraph
