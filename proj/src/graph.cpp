#include "robustgraph/graph.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

namespace robustgraph {

namespace {

std::string at_line(std::size_t line) {
  return line > 0 ? "line " + std::to_string(line) + ": " : std::string();
}

}  // namespace

SelfLoopError::SelfLoopError(Vertex v, std::size_t line)
    : GraphError(at_line(line) + "self-loop at vertex " + std::to_string(v)),
      vertex(v),
      line(line) {}

DuplicateEdgeError::DuplicateEdgeError(Vertex u, Vertex v, std::size_t line)
    : GraphError(at_line(line) + "duplicate edge (" + std::to_string(u) + ", " +
                 std::to_string(v) + ")"),
      u(u),
      v(v),
      line(line) {}

VertexOutOfRangeError::VertexOutOfRangeError(std::size_t id, std::size_t n, std::size_t line)
    : GraphError(at_line(line) + "vertex " + std::to_string(id) + " out of range for n = " +
                 std::to_string(n)),
      id(id),
      n(n),
      line(line) {}

namespace {

void check_pairs(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw GraphError("vertex count exceeds 32-bit id range");
  }
  for (const auto& [u, v] : edges) {
    if (u >= n) throw VertexOutOfRangeError(u, n);
    if (v >= n) throw VertexOutOfRangeError(v, n);
    if (u == v) throw SelfLoopError(u);
  }
}

// Fills CSR lists from (source, target) pairs; `symmetric` also records the
// reverse of each pair. Entries keep input order.
AdjacencyArray fill_lists(std::size_t n, std::span<const Edge> edges, bool symmetric) {
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++offsets[u + 1];
    if (symmetric) ++offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<Vertex> entries(offsets[n]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    entries[cursor[u]++] = v;
    if (symmetric) entries[cursor[v]++] = u;
  }
  return {std::move(offsets), std::move(entries)};
}

// Stamp-based duplicate scan, O(n + m).
void reject_duplicates(const AdjacencyArray& lists, bool symmetric) {
  const std::size_t n = lists.num_lists();
  std::vector<std::size_t> stamp(n, std::numeric_limits<std::size_t>::max());
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : lists[v]) {
      if (stamp[w] == v) {
        if (symmetric) throw DuplicateEdgeError(std::min(v, w), std::max(v, w));
        throw DuplicateEdgeError(v, w);
      }
      stamp[w] = v;
    }
  }
}

}  // namespace

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : successors(u)) out.emplace_back(u, v);
  }
  return out;
}

UndirectedGraph build_undirected(std::size_t n, std::span<const Edge> edges) {
  check_pairs(n, edges);
  auto lists = fill_lists(n, edges, true);
  reject_duplicates(lists, true);
  return UndirectedGraph::from_trusted(std::move(lists));
}

DirectedGraph build_directed(std::size_t n, std::span<const Edge> edges) {
  check_pairs(n, edges);
  auto lists = fill_lists(n, edges, false);
  reject_duplicates(lists, false);
  return DirectedGraph::from_trusted(std::move(lists));
}

bool adjacency_test(const UndirectedGraph& g, Vertex u, Vertex v, std::size_t& scanned) {
  const std::size_t n = g.num_vertices();
  if (u >= n) throw VertexOutOfRangeError(u, n);
  if (v >= n) throw VertexOutOfRangeError(v, n);
  if (u == v) throw SelfLoopError(u);
  if (g.degree(u) > g.degree(v)) std::swap(u, v);
  const auto list = g.neighbors(u);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == v) {
      scanned += i + 1;
      return true;
    }
  }
  scanned += list.size();
  return false;
}

bool adjacency_test(const UndirectedGraph& g, Vertex u, Vertex v) {
  std::size_t ignored = 0;
  return adjacency_test(g, u, v, ignored);
}

AdjacencyArray bucket_transpose(const AdjacencyArray& lists) {
  const std::size_t n = lists.num_lists();
  std::vector<std::size_t> offsets(n + 1, 0);
  for (Vertex w : lists.entries()) ++offsets[w + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<Vertex> entries(offsets[n]);
  std::vector<std::size_t> tail(offsets.begin(), offsets.end() - 1);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : lists[v]) entries[tail[u]++] = v;
  }
  return {std::move(offsets), std::move(entries)};
}

SortedAdjacency counting_sort_transpose(const DirectedGraph& d) {
  SortedAdjacency s;
  s.backward = bucket_transpose(d.adjacency());
  s.forward = bucket_transpose(s.backward);
  return s;
}

bool BiNeighborTable::contains(Vertex v, Vertex u) const {
  const auto list = lists_[v];
  return std::binary_search(list.begin(), list.end(), u);
}

BiNeighborTable bidirected_table(const SortedAdjacency& s) {
  const std::size_t n = s.num_vertices();
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<Vertex> entries;
  for (Vertex v = 0; v < n; ++v) {
    const auto out = s.forward[v];
    const auto in = s.backward[v];
    std::set_intersection(out.begin(), out.end(), in.begin(), in.end(),
                          std::back_inserter(entries));
    offsets[v + 1] = entries.size();
  }
  return BiNeighborTable(AdjacencyArray(std::move(offsets), std::move(entries)));
}

}  // namespace robustgraph
