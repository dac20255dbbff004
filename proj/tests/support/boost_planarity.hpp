#pragma once

// Independent planarity reference (Boyer-Myrvold, Boost.Graph).

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "robustgraph/graph.hpp"

namespace robustgraph::testing {

inline bool boost_is_planar(const UndirectedGraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  BoostGraph b(g.num_vertices());
  for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, b);
  return boost::boyer_myrvold_planarity_test(b);
}

}  // namespace robustgraph::testing
