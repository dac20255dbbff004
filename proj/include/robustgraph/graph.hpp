#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace robustgraph {

/// Dense vertex id in [0, n).
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when an edge list does not describe a simple graph. These are
/// malformed inputs, not domain verdicts.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// `line` is the 1-based input line when the error comes from a parser, 0
// otherwise.

class SelfLoopError : public GraphError {
 public:
  explicit SelfLoopError(Vertex v, std::size_t line = 0);
  Vertex vertex;
  std::size_t line;
};

class DuplicateEdgeError : public GraphError {
 public:
  DuplicateEdgeError(Vertex u, Vertex v, std::size_t line = 0);
  Vertex u, v;
  std::size_t line;
};

class VertexOutOfRangeError : public GraphError {
 public:
  VertexOutOfRangeError(std::size_t id, std::size_t n, std::size_t line = 0);
  std::size_t id, n;
  std::size_t line;
};

/// Flat per-vertex lists: list(v) is entries[offsets[v], offsets[v+1]).
class AdjacencyArray {
 public:
  AdjacencyArray() : offsets_(1, 0) {}
  AdjacencyArray(std::vector<std::size_t> offsets, std::vector<Vertex> entries)
      : offsets_(std::move(offsets)), entries_(std::move(entries)) {}

  std::size_t num_lists() const noexcept { return offsets_.size() - 1; }
  std::size_t num_entries() const noexcept { return entries_.size(); }
  std::size_t size(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> operator[](Vertex v) const noexcept {
    return {entries_.data() + offsets_[v], size(v)};
  }

  const std::vector<std::size_t>& offsets() const noexcept { return offsets_; }
  const std::vector<Vertex>& entries() const noexcept { return entries_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> entries_;
};

/// Simple undirected graph stored as symmetric adjacency lists.
///
/// Every edge appears twice (once per endpoint). Degrees are the list
/// lengths and are read from the offset array without touching the lists.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  std::size_t num_vertices() const noexcept { return adj_.num_lists(); }
  std::size_t num_edges() const noexcept { return adj_.num_entries() / 2; }
  std::size_t degree(Vertex v) const noexcept { return adj_.size(v); }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[v]; }
  const AdjacencyArray& adjacency() const noexcept { return adj_; }

  /// Each edge once, as (u, v) with u < v, ordered by u then adjacency order.
  std::vector<Edge> edges() const;

  /// Takes ownership of adjacency lists already known to be simple and
  /// symmetric. Used by generators that construct graphs directly.
  static UndirectedGraph from_trusted(AdjacencyArray adj) {
    UndirectedGraph g;
    g.adj_ = std::move(adj);
    return g;
  }

 private:
  AdjacencyArray adj_;
};

/// Simple directed graph stored as out-adjacency lists.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  std::size_t num_vertices() const noexcept { return out_.num_lists(); }
  std::size_t num_edges() const noexcept { return out_.num_entries(); }
  std::size_t out_degree(Vertex v) const noexcept { return out_.size(v); }
  std::span<const Vertex> successors(Vertex v) const noexcept { return out_[v]; }
  const AdjacencyArray& adjacency() const noexcept { return out_; }

  std::vector<Edge> edges() const;

  static DirectedGraph from_trusted(AdjacencyArray out) {
    DirectedGraph g;
    g.out_ = std::move(out);
    return g;
  }

 private:
  AdjacencyArray out_;
};

/// Builds an undirected graph; each edge is listed once in either orientation.
/// Throws SelfLoopError, DuplicateEdgeError or VertexOutOfRangeError.
UndirectedGraph build_undirected(std::size_t n, std::span<const Edge> edges);

/// Builds a directed graph from (source, target) pairs. A pair and its
/// reverse are two distinct edges; repeating the same pair is an error.
DirectedGraph build_directed(std::size_t n, std::span<const Edge> edges);

/// Adjacency query that scans the shorter of the two lists.
/// Requires u != v and both in range.
bool adjacency_test(const UndirectedGraph& g, Vertex u, Vertex v);

/// Same as adjacency_test, adding the number of list entries examined to
/// `scanned`.
bool adjacency_test(const UndirectedGraph& g, Vertex u, Vertex v, std::size_t& scanned);

/// Out- and in-lists of a digraph, each sorted by ascending vertex id.
struct SortedAdjacency {
  AdjacencyArray forward;   // successors of v
  AdjacencyArray backward;  // predecessors of v

  std::size_t num_vertices() const noexcept { return forward.num_lists(); }
};

/// Two stable bucket passes in ascending source order: the first yields the
/// transpose with sorted lists, the second transposes back. O(n + m).
SortedAdjacency counting_sort_transpose(const DirectedGraph& d);

/// Transposes `lists` by bucket distribution. Sources are visited in
/// ascending order, so every output list comes out sorted.
AdjacencyArray bucket_transpose(const AdjacencyArray& lists);

/// For each v, the sorted set of vertices u with both v->u and u->v.
class BiNeighborTable {
 public:
  BiNeighborTable() = default;
  explicit BiNeighborTable(AdjacencyArray lists) : lists_(std::move(lists)) {}

  std::size_t num_vertices() const noexcept { return lists_.num_lists(); }
  std::size_t count(Vertex v) const noexcept { return lists_.size(v); }
  std::span<const Vertex> operator[](Vertex v) const noexcept { return lists_[v]; }
  bool contains(Vertex v, Vertex u) const;

 private:
  AdjacencyArray lists_;
};

/// Linear merge-intersection of forward(v) and backward(v) for every v.
BiNeighborTable bidirected_table(const SortedAdjacency& s);

}  // namespace robustgraph
