#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "robustgraph/graph.hpp"

namespace robustgraph {

/// A site in the plane with its associated radius.
struct Site {
  double x = 0.0;
  double y = 0.0;
  double r = 1.0;

  friend bool operator==(const Site&, const Site&) = default;
};

/// Sequence of sites; index i becomes vertex i of any graph built from it.
/// Radii must be positive and all values finite.
class SiteSet {
 public:
  SiteSet() = default;
  explicit SiteSet(std::vector<Site> sites);

  std::size_t size() const noexcept { return sites_.size(); }
  bool empty() const noexcept { return sites_.empty(); }
  const Site& operator[](std::size_t i) const noexcept { return sites_[i]; }
  auto begin() const noexcept { return sites_.begin(); }
  auto end() const noexcept { return sites_.end(); }
  const std::vector<Site>& sites() const noexcept { return sites_; }

  friend bool operator==(const SiteSet&, const SiteSet&) = default;

 private:
  std::vector<Site> sites_;
};

class NonUnitRadiusError : public std::invalid_argument {
 public:
  explicit NonUnitRadiusError(std::size_t index);
  std::size_t index;
};

/// Edge {s, t} iff |st|^2 <= 4. Every radius must be exactly 1.
/// Uses a uniform grid of cell width 2 and builds adjacency in two passes.
UndirectedGraph unit_disk_graph(const SiteSet& sites);

/// Edge s -> t iff |st|^2 <= r_s^2.
DirectedGraph transmission_graph(const SiteSet& sites);

struct RadiusRange {
  double lo = 1.0;
  double hi = 1.0;
};

/// Deterministic uniform sites in [0, box)^2 with radii uniform in the range.
///
/// A candidate site is redrawn while its distance to any earlier site lies
/// within relative 1e-9 of a connection threshold (r_s + r_t, r_s or r_t),
/// so edge sets do not depend on floating-point rounding.
SiteSet random_sites(std::size_t n, double box, RadiusRange radii, std::uint64_t seed);

/// Relative margin kept between generated distances and thresholds.
inline constexpr double kThresholdMargin = 1e-9;

// Non-realizable fixtures.

/// K_{1,k}; vertex 0 is the center.
UndirectedGraph star_graph(std::size_t k);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
UndirectedGraph petersen_graph();
/// 0 -> 1 -> ... -> k-1 -> 0 with no reverse edges. Requires k >= 3.
DirectedGraph directed_cycle(std::size_t k);
/// Center 0 joined to 1..k by edges in both directions.
DirectedGraph bidirected_star(std::size_t k);

}  // namespace robustgraph
