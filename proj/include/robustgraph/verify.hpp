#pragma once

#include <optional>
#include <span>
#include <string>

#include "robustgraph/graph.hpp"
#include "robustgraph/outcome.hpp"

// Certificate checking for robust outcomes. Answers are compared against
// the brute-force oracles; NotInDomain verdicts are accepted when their
// witness re-validates against the input.
namespace robustgraph::verify {

/// nullopt when consistent, else a description of the first problem.
std::optional<std::string> check_outcome(const UndirectedGraph& g, const TriangleOutcome& outcome);
std::optional<std::string> check_outcome(const UndirectedGraph& g, const GirthOutcome& outcome);
std::optional<std::string> check_outcome(const DirectedGraph& d,
                                         const DirectedTriangleOutcome& outcome);

/// Witness checks alone, without consulting an oracle for the answer.
///
/// A NonPlanarTriangleFree witness is checked for triangle-freeness and then
/// either for the edge bound m > 2n - 4 (independent certificate) or by
/// re-running the planarity test on the induced subgraph (consistency only).
std::optional<std::string> check_witness(const UndirectedGraph& g, const NotInDomain& reject);
std::optional<std::string> check_witness(const DirectedGraph& d, const NotInDomain& reject);

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> vertices);

}  // namespace robustgraph::verify
