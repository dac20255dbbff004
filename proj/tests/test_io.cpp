#include <sstream>

#include "doctest.h"
#include "robustgraph/geometry.hpp"
#include "robustgraph/io.hpp"
#include "support/fixtures.hpp"

using namespace robustgraph;
using robustgraph::testing::sorted_edges;

namespace {

template <class Error>
std::size_t line_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_edge_list(in);
  } catch (const Error& e) {
    return e.line;
  }
  FAIL("expected an error");
  return 0;
}

}  // namespace

TEST_CASE("edge list round trip") {
  const auto g = robustgraph::testing::grid_graph(3, 4);
  std::stringstream buf;
  write_edge_list(buf, g);
  CHECK(sorted_edges(read_undirected(buf)) == sorted_edges(g));

  const auto d = bidirected_star(4);
  std::stringstream dbuf;
  write_edge_list(dbuf, d);
  CHECK(sorted_edges(read_directed(dbuf)) == sorted_edges(d));
}

TEST_CASE("edge list parsing") {
  std::istringstream blank("3 2 u\n\n0 1\n\n1 2\n\n");
  CHECK(read_undirected(blank).num_edges() == 2);

  std::istringstream kind("2 1 d\n0 1\n");
  CHECK_THROWS_AS(read_undirected(kind), std::exception);

  CHECK(line_of<ParseError>("3 1 x\n0 1\n") == 1);
  CHECK(line_of<ParseError>("3 2 u\n0 1\n") == 2);
  CHECK(line_of<ParseError>("3 1 u\n0 one\n") == 2);
  CHECK(line_of<ParseError>("3 1 u\n0 1\n1 2\n") == 3);
  CHECK(line_of<SelfLoopError>("3 2 u\n0 1\n2 2\n") == 3);
  CHECK(line_of<DuplicateEdgeError>("3 2 u\n0 1\n1 0\n") == 3);
  CHECK(line_of<VertexOutOfRangeError>("3 1 d\n0 3\n") == 2);

  std::istringstream reverse("2 2 d\n0 1\n1 0\n");
  CHECK(read_directed(reverse).num_edges() == 2);
}

TEST_CASE("sites round trip is exact") {
  const auto sites = random_sites(200, 7.0, {0.5, 2.0}, 13);
  std::stringstream buf;
  write_sites(buf, sites);
  CHECK(read_sites(buf) == sites);

  std::istringstream bad("1\n0 0 -1\n");
  CHECK_THROWS(read_sites(bad));
  std::istringstream short_file("2\n0 0 1\n");
  CHECK_THROWS_AS(read_sites(short_file), ParseError);
}
