// Acceptance run: one PASS/FAIL line per criterion. Oracle self-validation
// runs first; the oracle-backed criteria are not evaluated if it fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "robustgraph/geometry.hpp"
#include "robustgraph/oracle.hpp"
#include "robustgraph/tg_robust.hpp"
#include "robustgraph/udg_robust.hpp"
#include "robustgraph/verify.hpp"
#include "support/boost_planarity.hpp"
#include "support/fixtures.hpp"

using namespace robustgraph;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Row {
  std::string title;
  Verdict verdict;
  double seconds = 0;
};

// Mean degree targets; the box side follows from the expected degree
// pi * (r_s + r_t)^2 * n / box^2 of a unit disk graph (edges at distance 2).
constexpr double kUdgDegrees[] = {0.5, 1.0, 2.0, 3.0, 5.0, 8.0, 14.0, 25.0};
// For transmission graphs the mean out-degree is pi * E[r^2] * n / box^2,
// with E[r^2] = 1.75 for radii uniform in [0.5, 2].
constexpr double kTgDegrees[] = {0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 14.0};

double udg_box(std::size_t n, double degree) { return std::sqrt(4.0 * M_PI * static_cast<double>(n) / degree); }
double tg_box(std::size_t n, double degree) { return std::sqrt(1.75 * M_PI * static_cast<double>(n) / degree); }

/// Instances whose brute-force answer is TriangleFree feed the planarity check.
struct TriangleFreeTally {
  std::size_t graphs = 0;
  std::size_t violations = 0;

  void add(const UndirectedGraph& g) {
    ++graphs;
    if (!planarity(g, true) || !testing::boost_is_planar(g)) ++violations;
  }
};

TriangleFreeTally triangle_free_tally;
std::size_t tg_corpus_size = 0;
std::size_t uni_cycles = 0;

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

Verdict oracle_self_validation() {
  std::size_t exhaustive = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask, ++exhaustive) {
      std::vector<Edge> e;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1u) e.push_back(slots[i]);
      }
      const auto g = build_undirected(n, e);
      if (oracle::brute_girth(g) != oracle::girth_by_cycle_enumeration(g)) {
        return {false, format("mismatch on exhaustive graph n=%zu mask=%u", n, mask)};
      }
    }
  }
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> density(0.05, 0.7);
  constexpr int kRandom = 100000;
  for (int rep = 0; rep < kRandom; ++rep) {
    const auto g = testing::random_graph(size(rng), density(rng), rng);
    if (oracle::brute_girth(g) != oracle::girth_by_cycle_enumeration(g)) {
      return {false, format("mismatch on random graph %d", rep)};
    }
  }
  return {true, format("%zu exhaustive graphs (n <= 5) and %d random graphs (n <= 8) agree", exhaustive,
                       kRandom)};
}

Verdict udg_triangle_equivalence() {
  std::size_t with_triangle = 0, triangle_free = 0, high_branch = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const std::size_t n = 10 + (i * 7919) % 1991;
    const double degree = kUdgDegrees[i % std::size(kUdgDegrees)];
    const std::uint64_t seed = 1000 + i;
    const double box = udg_box(n, degree);
    // Every fifth instance is grown greedily without triangles.
    const SiteSet sites = i % 5 == 4 ? testing::triangle_free_sites(n, box, seed)
                                     : random_sites(n, box, {1, 1}, seed);
    const auto g = unit_disk_graph(sites);
    TriangleCounters c;
    const auto out = find_triangle_udg(g, &c);
    if (std::holds_alternative<NotInDomain>(out)) return {false, format("instance %zu rejected", i)};
    const auto expected = oracle::brute_triangle(g);
    if (std::holds_alternative<Triangle>(out) != expected.has_value()) {
      return {false, format("instance %zu: class differs from brute force", i)};
    }
    if (const auto problem = verify::check_outcome(g, out)) {
      return {false, format("instance %zu: %s", i, problem->c_str())};
    }
    if (expected) {
      ++with_triangle;
    } else {
      ++triangle_free;
      triangle_free_tally.add(g);
    }
    high_branch += c.high_degree_branch;
  }
  return {true, format("500 graphs, %zu with a triangle (%zu via the degree > 5 branch), %zu triangle-free",
                       with_triangle, high_branch, triangle_free)};
}

Verdict udg_girth_equivalence() {
  std::map<std::size_t, std::size_t> histogram;
  std::size_t forests = 0;
  for (std::size_t i = 0; i < 300; ++i) {
    const std::size_t n = 10 + (i * 6007) % 991;
    const std::uint64_t seed = 5000 + i;
    SiteSet sites;
    switch (i % 3) {
      case 0: sites = random_sites(n, udg_box(n, 0.5 + 0.25 * static_cast<double>(i % 10)), {1, 1}, seed); break;
      case 1: sites = random_sites(n, udg_box(n, kUdgDegrees[i % std::size(kUdgDegrees)]), {1, 1}, seed); break;
      default: sites = testing::triangle_free_sites(n, udg_box(n, 3.0), seed); break;
    }
    const auto g = unit_disk_graph(sites);
    const auto out = girth_udg(g);
    if (std::holds_alternative<NotInDomain>(out)) return {false, format("instance %zu rejected", i)};
    const auto expected = oracle::brute_girth(g);
    if (const auto* girth = std::get_if<Girth>(&out)) {
      if (!expected || *expected != girth->length) {
        return {false, format("instance %zu: girth %zu, brute force %zu", i, girth->length,
                              expected ? *expected : std::size_t{0})};
      }
      if (!oracle::is_simple_cycle(g, girth->cycle) || girth->cycle.size() != girth->length) {
        return {false, format("instance %zu: witness is not a cycle of the reported length", i)};
      }
      ++histogram[girth->length];
    } else if (expected) {
      return {false, format("instance %zu: NoCycle, brute force %zu", i, *expected)};
    } else {
      ++forests;
    }
    if (!oracle::brute_triangle(g)) triangle_free_tally.add(g);
  }
  std::ostringstream lengths;
  for (const auto& [length, count] : histogram) lengths << ' ' << length << ':' << count;
  return {true, format("300 graphs; girth histogram%s; %zu forests", lengths.str().c_str(), forests)};
}

Verdict adversarial_verdicts() {
  struct Case {
    const char* name;
    DomainReason expected;
    std::function<std::optional<NotInDomain>()> run;
    std::function<std::optional<std::string>(const NotInDomain&)> check;
  };
  const auto star = star_graph(7);
  const auto petersen = petersen_graph();
  const auto dicycle = directed_cycle(3);
  const auto bistar = bidirected_star(7);
  auto rejection = [](const auto& outcome) -> std::optional<NotInDomain> {
    if (const auto* r = std::get_if<NotInDomain>(&outcome)) return *r;
    return std::nullopt;
  };
  const Case cases[] = {
      {"star(7)", DomainReason::HighDegreeNoTriangle, [&] { return rejection(find_triangle_udg(star)); },
       [&](const NotInDomain& r) { return verify::check_witness(star, r); }},
      {"Petersen", DomainReason::NonPlanarTriangleFree, [&] { return rejection(girth_udg(petersen)); },
       [&](const NotInDomain& r) { return verify::check_witness(petersen, r); }},
      {"dicycle(3)", DomainReason::UniSubgraphCyclic, [&] { return rejection(find_directed_triangle(dicycle)); },
       [&](const NotInDomain& r) { return verify::check_witness(dicycle, r); }},
      {"bistar(7)", DomainReason::HighBiDegreeNoTriangle,
       [&] { return rejection(find_directed_triangle(bistar)); },
       [&](const NotInDomain& r) { return verify::check_witness(bistar, r); }},
  };
  std::string summary;
  for (const Case& c : cases) {
    const auto r = c.run();
    if (!r) return {false, format("%s was not rejected", c.name)};
    if (r->reason != c.expected) {
      return {false, format("%s rejected with %s", c.name, std::string(to_string(r->reason)).c_str())};
    }
    if (const auto problem = c.check(*r)) return {false, format("%s witness: %s", c.name, problem->c_str())};
    summary += format("%s%s -> %s", summary.empty() ? "" : ", ", c.name,
                      std::string(to_string(r->reason)).c_str());
  }
  return {true, summary + "; witnesses re-validated"};
}

Verdict tg_triangle_equivalence() {
  std::size_t found = 0, free = 0, case_a = 0, max_traversals = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const std::size_t n = 10 + (i * 3571) % 1991;
    const double degree = kTgDegrees[i % std::size(kTgDegrees)];
    const auto d = transmission_graph(random_sites(n, tg_box(n, degree), {0.5, 2.0}, 9000 + i));
    DirectedTriangleCounters c;
    const auto out = find_directed_triangle(d, &c);
    if (std::holds_alternative<NotInDomain>(out)) return {false, format("instance %zu rejected", i)};
    const auto expected = oracle::brute_directed_triangle(d);
    if (std::holds_alternative<DirectedTriangle>(out) != expected.has_value()) {
      return {false, format("instance %zu: class differs from brute force", i)};
    }
    if (const auto problem = verify::check_outcome(d, out)) {
      return {false, format("instance %zu: %s", i, problem->c_str())};
    }
    expected ? ++found : ++free;
    case_a += c.high_bidegree_branch;
    max_traversals = std::max(max_traversals, c.max_list_traversals);

    ++tg_corpus_size;
    const auto bi = bidirected_table(counting_sort_transpose(d));
    if (std::holds_alternative<Cycle>(acyclicity_check(uni_subgraph(d, bi)))) ++uni_cycles;
  }
  return {true, format("500 graphs, %zu with a triangle (%zu via bidegree > 6), %zu triangle-free; "
                       "max list traversals %zu",
                       found, case_a, free, max_traversals)};
}

Verdict lemma_suites() {
  std::mt19937_64 rng(61);
  constexpr std::size_t kSamples = 100000;
  std::size_t sampled = 0, lemma1_violations = 0;
  for (std::uint64_t seed = 0; sampled < kSamples; ++seed) {
    const std::size_t n = 2000;
    const auto g = unit_disk_graph(random_sites(n, udg_box(n, 10.0), {1, 1}, 20000 + seed));
    for (Vertex v = 0; v < n && sampled < kSamples; ++v) {
      const auto nb = g.neighbors(v);
      if (nb.size() < 6) continue;
      std::vector<Vertex> pick;
      std::sample(nb.begin(), nb.end(), std::back_inserter(pick), 6, rng);
      bool joined = false;
      for (int a = 0; a < 6 && !joined; ++a) {
        for (int b = a + 1; b < 6 && !joined; ++b) joined = oracle::has_edge(g, pick[a], pick[b]);
      }
      lemma1_violations += !joined;
      ++sampled;
    }
  }
  const bool pass = lemma1_violations == 0 && triangle_free_tally.violations == 0 && uni_cycles == 0 &&
                    triangle_free_tally.graphs > 0 && tg_corpus_size > 0;
  return {pass, format("six-neighbor property: %zu violations in %zu neighborhoods; triangle-free => planar: "
                       "%zu violations in %zu graphs; acyclic G_uni: %zu violations in %zu transmission graphs",
                       lemma1_violations, sampled, triangle_free_tally.violations, triangle_free_tally.graphs,
                       uni_cycles, tg_corpus_size)};
}

std::string rows_summary(const std::vector<cli::BenchRow>& rows) {
  std::string s;
  for (const auto& r : rows) s += format(" n=%zu m=%zu q=%lluns;", r.n, r.m, static_cast<unsigned long long>(r.query_ns));
  return s;
}

Verdict triangle_scaling() {
  const std::vector<std::size_t> sizes{1024, 2048, 4096, 8192, 16384};
  const auto rows = cli::bench(cli::Problem::Triangle, sizes, 1, 5);
  for (const auto& r : rows) {
    if (r.counters.at("entries_scanned") > 21 * r.n) {
      return {false, format("n=%zu scanned %llu adjacency entries", r.n,
                            static_cast<unsigned long long>(r.counters.at("entries_scanned")))};
    }
  }
  const double slope = cli::query_slope(cli::Problem::Triangle, rows);
  return {slope <= 1.2, format("slope %.3f against n (limit 1.2); entries scanned <= 21n;%s", slope,
                               rows_summary(rows).c_str())};
}

Verdict tg_scaling() {
  const std::vector<std::size_t> sizes{1024, 2048, 4096, 8192, 16384};
  const auto rows = cli::bench(cli::Problem::TgTriangle, sizes, 1, 5);
  const double slope = cli::query_slope(cli::Problem::TgTriangle, rows);
  return {slope <= 1.2, format("slope %.3f against n+m (limit 1.2);%s", slope, rows_summary(rows).c_str())};
}

Row evaluate(std::string title, const std::function<Verdict()>& criterion) {
  const auto start = std::chrono::steady_clock::now();
  Row row{std::move(title), {}, 0};
  try {
    row.verdict = criterion();
  } catch (const std::exception& e) {
    row.verdict = {false, std::string("exception: ") + e.what()};
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

int main() {
  std::map<int, Row> rows;
  rows[8] = evaluate("oracle self-validation", oracle_self_validation);
  const bool oracles_ok = rows[8].verdict.pass;
  auto oracle_backed = [&](std::string title, const std::function<Verdict()>& criterion) {
    if (oracles_ok) return evaluate(std::move(title), criterion);
    return Row{std::move(title), {false, "skipped: oracle self-validation failed"}, 0};
  };
  rows[1] = oracle_backed("UDG triangle vs brute force", udg_triangle_equivalence);
  rows[2] = oracle_backed("UDG girth vs brute force", udg_girth_equivalence);
  rows[3] = evaluate("adversarial verdicts", adversarial_verdicts);
  rows[4] = oracle_backed("TG triangle vs brute force", tg_triangle_equivalence);
  rows[5] = oracle_backed("lemma-level invariants", lemma_suites);
  rows[6] = evaluate("UDG triangle query scaling", triangle_scaling);
  rows[7] = evaluate("TG triangle total scaling", tg_scaling);

  bool all = true;
  for (const auto& [id, row] : rows) {
    all = all && row.verdict.pass;
    std::printf("%s %d %s (%.1f s): %s\n", row.verdict.pass ? "PASS" : "FAIL", id, row.title.c_str(),
                row.seconds, row.verdict.detail.c_str());
  }
  return all ? 0 : 1;
}
