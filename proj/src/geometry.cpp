#include "robustgraph/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_map>

namespace robustgraph {

SiteSet::SiteSet(std::vector<Site> sites) : sites_(std::move(sites)) {
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    const Site& s = sites_[i];
    if (!std::isfinite(s.x) || !std::isfinite(s.y) || !std::isfinite(s.r)) {
      throw std::invalid_argument("site " + std::to_string(i) + " has a non-finite value");
    }
    if (!(s.r > 0.0)) {
      throw std::invalid_argument("site " + std::to_string(i) + " has non-positive radius");
    }
  }
}

NonUnitRadiusError::NonUnitRadiusError(std::size_t index)
    : std::invalid_argument("site " + std::to_string(index) + " does not have radius 1"),
      index(index) {}

namespace {

struct Cell {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    const auto h = static_cast<std::uint64_t>(c.x) * 0x9E3779B97F4A7C15ULL ^
                   (static_cast<std::uint64_t>(c.y) + 0x7F4A7C159E3779B9ULL);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Static bucketing of all sites into square cells of a fixed width.
class SiteGrid {
 public:
  SiteGrid(const SiteSet& sites, double width) : width_(width) {
    order_.resize(sites.size());
    std::vector<Cell> keys(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
      order_[i] = static_cast<Vertex>(i);
      keys[i] = cell_of(sites[i]);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return keys[a].x != keys[b].x ? keys[a].x < keys[b].x : keys[a].y < keys[b].y;
    });
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= order_.size(); ++i) {
      if (i == order_.size() || !(keys[order_[i]] == keys[order_[begin]])) {
        ranges_.emplace(keys[order_[begin]], std::pair{begin, i});
        begin = i;
      }
    }
  }

  Cell cell_of(const Site& s) const {
    return {static_cast<std::int64_t>(std::floor(s.x / width_)),
            static_cast<std::int64_t>(std::floor(s.y / width_))};
  }

  /// Calls fn(j) for every site j in the cells within `reach` of `c`.
  template <class Fn>
  void for_each_near(Cell c, std::int64_t reach, Fn&& fn) const {
    for (std::int64_t dx = -reach; dx <= reach; ++dx) {
      for (std::int64_t dy = -reach; dy <= reach; ++dy) {
        const auto it = ranges_.find({c.x + dx, c.y + dy});
        if (it == ranges_.end()) continue;
        for (std::size_t k = it->second.first; k < it->second.second; ++k) fn(order_[k]);
      }
    }
  }

 private:
  double width_;
  std::vector<Vertex> order_;
  std::unordered_map<Cell, std::pair<std::size_t, std::size_t>, CellHash> ranges_;
};

double squared_distance(const Site& a, const Site& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Two-pass CSR fill: `visit(i, emit)` must call emit(j) for each out-neighbor
// j of i, identically on both passes.
template <class Visit>
AdjacencyArray build_lists(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t count = 0;
    visit(i, [&](Vertex) { ++count; });
    offsets[i + 1] = offsets[i] + count;
  }
  std::vector<Vertex> entries(offsets[n]);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pos = offsets[i];
    visit(i, [&](Vertex j) { entries[pos++] = j; });
  }
  return {std::move(offsets), std::move(entries)};
}

}  // namespace

UndirectedGraph unit_disk_graph(const SiteSet& sites) {
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i].r != 1.0) throw NonUnitRadiusError(i);
  }
  const SiteGrid grid(sites, 2.0);
  auto lists = build_lists(sites.size(), [&](std::size_t i, auto&& emit) {
    const Site& s = sites[i];
    grid.for_each_near(grid.cell_of(s), 1, [&](Vertex j) {
      if (j != i && squared_distance(s, sites[j]) <= 4.0) emit(j);
    });
  });
  return UndirectedGraph::from_trusted(std::move(lists));
}

DirectedGraph transmission_graph(const SiteSet& sites) {
  if (sites.empty()) return DirectedGraph::from_trusted(AdjacencyArray());
  double width = 0.0;
  for (const Site& s : sites) width = std::max(width, s.r);
  const SiteGrid grid(sites, width);
  auto lists = build_lists(sites.size(), [&](std::size_t i, auto&& emit) {
    const Site& s = sites[i];
    const auto reach = static_cast<std::int64_t>(std::ceil(s.r / width));
    const double limit = s.r * s.r;
    grid.for_each_near(grid.cell_of(s), reach, [&](Vertex j) {
      if (j != i && squared_distance(s, sites[j]) <= limit) emit(j);
    });
  });
  return DirectedGraph::from_trusted(std::move(lists));
}

namespace {

double unit_interval(std::mt19937_64& rng) {
  // 53 random mantissa bits; identical on every platform for a fixed seed.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool near_threshold(double d, double threshold) {
  return std::abs(d - threshold) <= kThresholdMargin * threshold;
}

}  // namespace

SiteSet random_sites(std::size_t n, double box, RadiusRange radii, std::uint64_t seed) {
  if (!(box > 0.0) || !std::isfinite(box)) throw std::invalid_argument("box side must be positive");
  if (!(radii.lo > 0.0) || !(radii.hi >= radii.lo) || !std::isfinite(radii.hi)) {
    throw std::invalid_argument("radius range must satisfy 0 < lo <= hi");
  }
  std::mt19937_64 rng(seed);
  std::vector<Site> out;
  out.reserve(n);

  // Cell width covers the largest threshold, with slack for the margin band.
  const double width = 2.0 * radii.hi * (1.0 + 1e-6);
  std::unordered_map<Cell, std::vector<std::uint32_t>, CellHash> cells;
  auto cell_of = [&](const Site& s) {
    return Cell{static_cast<std::int64_t>(std::floor(s.x / width)),
                static_cast<std::int64_t>(std::floor(s.y / width))};
  };

  while (out.size() < n) {
    Site c;
    c.x = box * unit_interval(rng);
    c.y = box * unit_interval(rng);
    c.r = radii.lo + (radii.hi - radii.lo) * unit_interval(rng);
    const Cell home = cell_of(c);
    bool ok = true;
    for (std::int64_t dx = -1; dx <= 1 && ok; ++dx) {
      for (std::int64_t dy = -1; dy <= 1 && ok; ++dy) {
        const auto it = cells.find({home.x + dx, home.y + dy});
        if (it == cells.end()) continue;
        for (std::uint32_t j : it->second) {
          const Site& o = out[j];
          const double d = std::sqrt(squared_distance(c, o));
          if (near_threshold(d, c.r + o.r) || near_threshold(d, c.r) || near_threshold(d, o.r)) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;
    cells[home].push_back(static_cast<std::uint32_t>(out.size()));
    out.push_back(c);
  }
  return SiteSet(std::move(out));
}

UndirectedGraph star_graph(std::size_t k) {
  if (k < 1) throw std::invalid_argument("star needs k >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= k; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return build_undirected(k + 1, edges);
}

UndirectedGraph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return build_undirected(10, edges);
}

DirectedGraph directed_cycle(std::size_t k) {
  if (k < 3) throw std::invalid_argument("directed cycle needs k >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k));
  }
  return build_directed(k, edges);
}

DirectedGraph bidirected_star(std::size_t k) {
  if (k < 1) throw std::invalid_argument("bidirected star needs k >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= k; ++i) {
    edges.emplace_back(0, static_cast<Vertex>(i));
    edges.emplace_back(static_cast<Vertex>(i), 0);
  }
  return build_directed(k + 1, edges);
}

}  // namespace robustgraph
