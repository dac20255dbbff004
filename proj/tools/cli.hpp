#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "robustgraph/geometry.hpp"
#include "robustgraph/io.hpp"
#include "robustgraph/outcome.hpp"

namespace robustgraph::cli {

enum class Problem { Triangle, Girth, TgTriangle };

Problem parse_problem(std::string_view name);
std::string_view to_string(Problem problem) noexcept;

/// Bad command-line arguments or an input of the wrong kind.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Record emitted by `solve` and `verify`, one JSON object per line.
struct ResultRecord {
  std::string command;
  Problem problem = Problem::Triangle;
  nlohmann::json input;
  std::string outcome;
  std::optional<std::vector<Vertex>> witness;
  std::optional<std::string> reason;
  std::optional<std::string> planarity;
  std::optional<std::size_t> girth;
  std::uint64_t construction_ns = 0;
  std::uint64_t query_ns = 0;
  std::map<std::string, std::uint64_t> counters;
  /// `verify` only: "pass" or "fail", with a message on failure.
  std::optional<std::string> verdict;
  std::optional<std::string> detail;

  nlohmann::json to_json() const;
  /// The NotInDomain verdict carried by the record, if any.
  std::optional<NotInDomain> rejection() const;
  /// Throws std::invalid_argument when a field is missing or mistyped.
  static ResultRecord from_json(const nlohmann::json& j);
};

struct GeneratorSpec {
  std::string kind;
  std::size_t n = 0;
  double box = 1.0;
  double rmin = 1.0;
  double rmax = 1.0;
  std::uint64_t seed = 0;

  nlohmann::json describe() const;
};

/// udg-sites and tg-sites produce sites; the fixture kinds produce graphs.
bool is_sites_kind(std::string_view kind);
SiteSet generate_sites(const GeneratorSpec& spec);
AnyGraph generate_fixture(const GeneratorSpec& spec);

struct Input {
  nlohmann::json descriptor;
  AnyGraph graph;
  /// Parsing plus graph construction.
  std::uint64_t construction_ns = 0;
};

/// Reads an edge list, or a sites file (single-number header) which is
/// turned into the graph matching `problem`.
Input load_input(Problem problem, const std::string& path);
Input generate_input(Problem problem, const GeneratorSpec& spec);

using AnyOutcome = std::variant<TriangleOutcome, GirthOutcome, DirectedTriangleOutcome>;

struct Solution {
  ResultRecord record;
  AnyOutcome outcome;
};

Solution solve(Problem problem, const Input& input);

/// Re-checks the solution with the brute-force oracles and witness checkers
/// and fills in the verdict. Throws oracle::OracleSizeError above the
/// oracle size cap.
void verify(const Input& input, Solution& solution);

/// 0 for answers, 2 for NotInDomain.
int exit_code_for(const ResultRecord& record) noexcept;

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t construction_ns = 0;
  std::uint64_t query_ns = 0;
  std::string outcome;
  std::map<std::string, std::uint64_t> counters;
};

/// Sites of the benchmark family for `problem`:
///   triangle     n unit disks in the unit square (complete graph)
///   girth        n unit disks in a square of side 2 sqrt(n)
///   tg-triangle  radii in [0.5, 2] in a square of side 2 sqrt(n)
SiteSet bench_sites(Problem problem, std::size_t n, std::uint64_t seed);

/// Medians over `reps` fresh constructions and queries per size.
std::vector<BenchRow> bench(Problem problem, const std::vector<std::size_t>& sizes,
                            std::uint64_t seed, std::size_t reps);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Least-squares slope of log(query_ns) against log(n), or log(n + m) for
/// tg-triangle.
double query_slope(Problem problem, const std::vector<BenchRow>& rows);

/// Full command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace robustgraph::cli
