#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "robustgraph/graph.hpp"
#include "robustgraph/outcome.hpp"

// Brute-force references for testing. They share nothing with the robust
// algorithms beyond the graph accessors.
namespace robustgraph::oracle {

/// Oracles refuse inputs above this many vertices.
inline constexpr std::size_t kMaxVertices = 5000;

class OracleSizeError : public std::length_error {
 public:
  OracleSizeError(std::size_t n, std::size_t cap);
};

/// Lexicographically smallest triangle a < b < c, if any.
std::optional<Triangle> brute_triangle(const UndirectedGraph& g);

/// Girth via unpruned BFS from every vertex; nullopt for forests.
std::optional<std::size_t> brute_girth(const UndirectedGraph& g);

/// Smallest (v, u, w) in lexicographic order with v -> u -> w -> v.
std::optional<DirectedTriangle> brute_directed_triangle(const DirectedGraph& d);

/// Shortest cycle by enumerating every simple cycle. Exponential; refuses
/// graphs with more than 12 vertices.
std::optional<std::size_t> girth_by_cycle_enumeration(const UndirectedGraph& g);

/// True iff `cycle` lists distinct vertices forming a cycle of g (length >= 3).
bool is_simple_cycle(const UndirectedGraph& g, std::span<const Vertex> cycle);

/// True iff `cycle` lists distinct vertices forming a directed cycle of d
/// (length >= 2).
bool is_directed_cycle(const DirectedGraph& d, std::span<const Vertex> cycle);

/// Plain linear-scan edge tests, independent of adjacency_test.
bool has_edge(const UndirectedGraph& g, Vertex u, Vertex v);
bool has_arc(const DirectedGraph& d, Vertex from, Vertex to);

}  // namespace robustgraph::oracle
