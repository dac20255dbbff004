#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "robustgraph/graph.hpp"

namespace robustgraph {

/// Why an input was rejected as outside the geometric domain.
enum class DomainReason {
  /// Witness: [v, u_1, ..., u_k], k >= 6, the u_i pairwise non-adjacent.
  HighDegreeNoTriangle,
  /// Witness: vertex set of a component that failed the planarity test.
  NonPlanarTriangleFree,
  /// Witness: a directed cycle v_0 -> ... -> v_{k-1} -> v_0 with no
  /// bidirected edge.
  UniSubgraphCyclic,
  /// Witness: [v, u_1, ..., u_7], each u_i a bidirected neighbor of v and no
  /// edge u_i -> u_j.
  HighBiDegreeNoTriangle,
};

std::string_view to_string(DomainReason reason) noexcept;

/// How the planarity test rejected a graph.
enum class PlanarityFailure {
  None,
  /// m exceeded 3n - 6, or 2n - 4 when the graph is known triangle-free.
  EdgeBound,
  /// The left-right constraint system had no solution on some component.
  LeftRightConflict,
};

std::string_view to_string(PlanarityFailure failure) noexcept;

struct NotInDomain {
  DomainReason reason;
  std::vector<Vertex> witness;
  PlanarityFailure planarity = PlanarityFailure::None;
};

struct Triangle {
  Vertex a, b, c;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

struct TriangleFree {};

using TriangleOutcome = std::variant<Triangle, TriangleFree, NotInDomain>;

struct Girth {
  std::size_t length;
  /// Simple cycle of `length` vertices; consecutive entries (and last,
  /// first) are adjacent.
  std::vector<Vertex> cycle;
};

struct NoCycle {};

using GirthOutcome = std::variant<Girth, NoCycle, NotInDomain>;

/// Directed triangle with edges v -> u, u -> w, w -> v.
struct DirectedTriangle {
  Vertex v, u, w;
  friend bool operator==(const DirectedTriangle&, const DirectedTriangle&) = default;
};

using DirectedTriangleOutcome = std::variant<DirectedTriangle, TriangleFree, NotInDomain>;

}  // namespace robustgraph
