#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "robustgraph/geometry.hpp"
#include "robustgraph/graph.hpp"

namespace robustgraph {

/// Syntax error in an edge-list or sites file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line;
};

enum class GraphKind { Undirected, Directed };

using AnyGraph = std::variant<UndirectedGraph, DirectedGraph>;

// Edge-list text format:
//
//   n m kind          kind is `u` (undirected) or `d` (directed)
//   u v               m lines; undirected edges listed once
//
// Blank lines are ignored. Structural violations raise the construction
// errors of graph.hpp, tagged with the offending line.

AnyGraph read_edge_list(std::istream& in);
UndirectedGraph read_undirected(std::istream& in);
DirectedGraph read_directed(std::istream& in);

void write_edge_list(std::ostream& out, const UndirectedGraph& g);
void write_edge_list(std::ostream& out, const DirectedGraph& d);

// Sites text format:
//
//   n
//   x y r             n lines, written with 17 significant digits

SiteSet read_sites(std::istream& in);
void write_sites(std::ostream& out, const SiteSet& sites);

}  // namespace robustgraph
