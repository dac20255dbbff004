#include "robustgraph/tg_robust.hpp"

#include <algorithm>
#include <limits>

namespace robustgraph {

DirectedGraph uni_subgraph(const DirectedGraph& d, const BiNeighborTable& bi) {
  const std::size_t n = d.num_vertices();
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<Vertex> entries;
  entries.reserve(d.num_edges());
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : d.successors(v)) {
      if (!bi.contains(v, u)) entries.push_back(u);
    }
    offsets[v + 1] = entries.size();
  }
  return DirectedGraph::from_trusted(AdjacencyArray(std::move(offsets), std::move(entries)));
}

AcyclicityResult acyclicity_check(const DirectedGraph& d) {
  const std::size_t n = d.num_vertices();
  std::vector<std::size_t> indegree(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : d.successors(v)) ++indegree[u];
  }
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) queue.push_back(v);
  }
  std::vector<bool> peeled(n, false);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    peeled[v] = true;
    for (Vertex u : d.successors(v)) {
      if (--indegree[u] == 0) queue.push_back(u);
    }
  }
  if (queue.size() == n) return Acyclic{};

  // Every unpeeled vertex keeps a predecessor outside the peeled set, so a
  // backward walk inside the residue must revisit a vertex.
  const AdjacencyArray pred = bucket_transpose(d.adjacency());
  Vertex start = 0;
  while (peeled[start]) ++start;

  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> step_of(n, kUnvisited);
  std::vector<Vertex> walk;
  Vertex x = start;
  while (step_of[x] == kUnvisited) {
    step_of[x] = walk.size();
    walk.push_back(x);
    const auto in = pred[x];
    x = *std::find_if(in.begin(), in.end(), [&](Vertex p) { return !peeled[p]; });
  }
  std::vector<Vertex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(step_of[x]), walk.end());
  std::reverse(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return Cycle{std::move(cycle)};
}

namespace {

constexpr std::size_t kBiDegreeThreshold = 6;
constexpr std::size_t kProbeNeighbors = 7;

DirectedTriangleOutcome probe_high_bidegree(const SortedAdjacency& s, const BiNeighborTable& bi,
                                            Vertex v) {
  const auto probe = bi[v].first(kProbeNeighbors);
  for (Vertex a : probe) {
    const auto out = s.forward[a];
    for (Vertex b : probe) {
      if (a != b && std::binary_search(out.begin(), out.end(), b)) {
        return DirectedTriangle{v, a, b};
      }
    }
  }
  NotInDomain reject{DomainReason::HighBiDegreeNoTriangle, {v}};
  reject.witness.insert(reject.witness.end(), probe.begin(), probe.end());
  return reject;
}

}  // namespace

DirectedTriangleOutcome find_directed_triangle(const DirectedGraph& d,
                                               DirectedTriangleCounters* counters) {
  DirectedTriangleCounters local;
  DirectedTriangleCounters& c = counters ? *counters : local;
  c = DirectedTriangleCounters{};
  const std::size_t n = d.num_vertices();

  const SortedAdjacency sorted = counting_sort_transpose(d);
  const BiNeighborTable bi = bidirected_table(sorted);

  for (Vertex v = 0; v < n; ++v) {
    if (bi.count(v) > kBiDegreeThreshold) {
      c.high_bidegree_branch = true;
      return probe_high_bidegree(sorted, bi, v);
    }
  }

  const AcyclicityResult acyclic = acyclicity_check(uni_subgraph(d, bi));
  if (auto* cycle = std::get_if<Cycle>(&acyclic)) {
    return NotInDomain{DomainReason::UniSubgraphCyclic, std::move(cycle->vertices)};
  }

  // Every remaining triangle v -> u -> w -> v has a bidirected edge; rotate
  // it so that edge is v -> u, then w lies in in(v) and out(u).
  std::vector<std::uint8_t> forward_traversals(n, 0);
  std::vector<std::uint8_t> backward_traversals(n, 0);
  auto finish = [&] {
    std::size_t most = 0;
    for (Vertex v = 0; v < n; ++v) {
      most = std::max<std::size_t>(most, forward_traversals[v]);
      most = std::max<std::size_t>(most, backward_traversals[v]);
    }
    c.max_list_traversals = most + 1;
  };

  for (Vertex v = 0; v < n; ++v) {
    const auto in = sorted.backward[v];
    for (Vertex u : bi[v]) {
      const auto out = sorted.forward[u];
      ++c.intersections;
      ++backward_traversals[v];
      ++forward_traversals[u];
      auto i = in.begin();
      auto j = out.begin();
      while (i != in.end() && j != out.end()) {
        ++c.entries_scanned;
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          if (*i != u && *i != v) {
            finish();
            return DirectedTriangle{v, u, *i};
          }
          ++i;
          ++j;
        }
      }
    }
  }
  finish();
  return TriangleFree{};
}

}  // namespace robustgraph
