#include "robustgraph/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace robustgraph {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank line split on whitespace; false at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, text_)) {
      ++line_;
      tokens.clear();
      std::string_view rest(text_);
      while (true) {
        const auto start = rest.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto stop = rest.find_first_of(" \t\r");
        tokens.push_back(rest.substr(0, stop));
        if (stop == std::string_view::npos) break;
        rest.remove_prefix(stop);
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::string text_;
  std::size_t line_ = 0;
};

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

double parse_real(std::string_view token, std::size_t line, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError(line, std::string("expected a finite number for ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

void expect_tokens(const std::vector<std::string_view>& tokens, std::size_t count,
                   std::size_t line, const char* shape) {
  if (tokens.size() != count) {
    throw ParseError(line, std::string("expected `") + shape + "`, found " +
                               std::to_string(tokens.size()) + " fields");
  }
}

}  // namespace

AnyGraph read_edge_list(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens)) throw ParseError(reader.line() + 1, "missing header `n m kind`");
  expect_tokens(tokens, 3, reader.line(), "n m kind");
  const std::size_t header_line = reader.line();
  const std::size_t n = parse_count(tokens[0], header_line, "n");
  const std::size_t m = parse_count(tokens[1], header_line, "m");
  GraphKind kind;
  if (tokens[2] == "u") {
    kind = GraphKind::Undirected;
  } else if (tokens[2] == "d") {
    kind = GraphKind::Directed;
  } else {
    throw ParseError(header_line, "kind must be `u` or `d`, got '" + std::string(tokens[2]) + "'");
  }
  if (n > 0xFFFFFFFFull) throw ParseError(header_line, "n exceeds 32-bit vertex ids");

  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m);
  while (edges.size() < m) {
    if (!reader.next(tokens)) {
      throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    }
    const std::size_t line = reader.line();
    expect_tokens(tokens, 2, line, "u v");
    const std::size_t a = parse_count(tokens[0], line, "u");
    const std::size_t b = parse_count(tokens[1], line, "v");
    if (a >= n) throw VertexOutOfRangeError(a, n, line);
    if (b >= n) throw VertexOutOfRangeError(b, n, line);
    if (a == b) throw SelfLoopError(static_cast<Vertex>(a), line);
    auto u = static_cast<Vertex>(a);
    auto v = static_cast<Vertex>(b);
    const auto lo = kind == GraphKind::Undirected ? std::min(u, v) : u;
    const auto hi = kind == GraphKind::Undirected ? std::max(u, v) : v;
    if (!seen.insert((std::uint64_t{lo} << 32) | hi).second) {
      throw DuplicateEdgeError(lo, hi, line);
    }
    edges.emplace_back(u, v);
  }
  if (reader.next(tokens)) {
    throw ParseError(reader.line(), "unexpected content after " + std::to_string(m) + " edges");
  }
  if (kind == GraphKind::Undirected) return build_undirected(n, edges);
  return build_directed(n, edges);
}

UndirectedGraph read_undirected(std::istream& in) {
  AnyGraph g = read_edge_list(in);
  if (auto* u = std::get_if<UndirectedGraph>(&g)) return std::move(*u);
  throw ParseError(1, "expected an undirected (`u`) edge list");
}

DirectedGraph read_directed(std::istream& in) {
  AnyGraph g = read_edge_list(in);
  if (auto* d = std::get_if<DirectedGraph>(&g)) return std::move(*d);
  throw ParseError(1, "expected a directed (`d`) edge list");
}

void write_edge_list(std::ostream& out, const UndirectedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << " u\n";
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(std::ostream& out, const DirectedGraph& d) {
  out << d.num_vertices() << ' ' << d.num_edges() << " d\n";
  for (const auto& [u, v] : d.edges()) out << u << ' ' << v << '\n';
}

SiteSet read_sites(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens)) throw ParseError(reader.line() + 1, "missing header `n`");
  expect_tokens(tokens, 1, reader.line(), "n");
  const std::size_t n = parse_count(tokens[0], reader.line(), "n");
  std::vector<Site> sites;
  sites.reserve(n);
  while (sites.size() < n) {
    if (!reader.next(tokens)) {
      throw ParseError(reader.line(), "expected " + std::to_string(n) + " sites, found " +
                                          std::to_string(sites.size()));
    }
    const std::size_t line = reader.line();
    expect_tokens(tokens, 3, line, "x y r");
    Site s{parse_real(tokens[0], line, "x"), parse_real(tokens[1], line, "y"),
           parse_real(tokens[2], line, "r")};
    if (!(s.r > 0.0)) throw ParseError(line, "radius must be positive");
    sites.push_back(s);
  }
  if (reader.next(tokens)) {
    throw ParseError(reader.line(), "unexpected content after " + std::to_string(n) + " sites");
  }
  return SiteSet(std::move(sites));
}

void write_sites(std::ostream& out, const SiteSet& sites) {
  out << sites.size() << '\n';
  char buf[96];
  for (const Site& s : sites) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", s.x, s.y, s.r);
    out << buf;
  }
}

}  // namespace robustgraph
