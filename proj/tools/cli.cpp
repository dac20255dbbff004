#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "robustgraph/oracle.hpp"
#include "robustgraph/tg_robust.hpp"
#include "robustgraph/udg_robust.hpp"
#include "robustgraph/verify.hpp"

namespace robustgraph::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::uint64_t nanos_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

const UndirectedGraph& undirected_input(const Input& input, Problem problem) {
  if (const auto* g = std::get_if<UndirectedGraph>(&input.graph)) return *g;
  throw UsageError(std::string(to_string(problem)) + " needs an undirected graph");
}

const DirectedGraph& directed_input(const Input& input, Problem problem) {
  if (const auto* d = std::get_if<DirectedGraph>(&input.graph)) return *d;
  throw UsageError(std::string(to_string(problem)) + " needs a directed graph");
}

AnyGraph graph_for(Problem problem, const SiteSet& sites) {
  if (problem == Problem::TgTriangle) return transmission_graph(sites);
  return unit_disk_graph(sites);
}

std::size_t edge_count(const AnyGraph& g) {
  return std::visit([](const auto& x) { return x.num_edges(); }, g);
}

void describe(ResultRecord& r, const NotInDomain& reject) {
  r.outcome = "NotInDomain";
  r.reason = std::string(to_string(reject.reason));
  r.witness = reject.witness;
  if (reject.planarity != PlanarityFailure::None) r.planarity = std::string(to_string(reject.planarity));
}

void describe(ResultRecord& r, const TriangleOutcome& outcome) {
  std::visit(Overloaded{
                 [&](const Triangle& t) {
                   r.outcome = "Triangle";
                   r.witness = std::vector<Vertex>{t.a, t.b, t.c};
                 },
                 [&](const TriangleFree&) { r.outcome = "TriangleFree"; },
                 [&](const NotInDomain& x) { describe(r, x); },
             },
             outcome);
}

void describe(ResultRecord& r, const GirthOutcome& outcome) {
  std::visit(Overloaded{
                 [&](const Girth& g) {
                   r.outcome = "Girth";
                   r.girth = g.length;
                   r.witness = g.cycle;
                 },
                 [&](const NoCycle&) { r.outcome = "NoCycle"; },
                 [&](const NotInDomain& x) { describe(r, x); },
             },
             outcome);
}

void describe(ResultRecord& r, const DirectedTriangleOutcome& outcome) {
  std::visit(Overloaded{
                 [&](const DirectedTriangle& t) {
                   r.outcome = "Triangle";
                   r.witness = std::vector<Vertex>{t.v, t.u, t.w};
                 },
                 [&](const TriangleFree&) { r.outcome = "TriangleFree"; },
                 [&](const NotInDomain& x) { describe(r, x); },
             },
             outcome);
}

std::uint64_t median(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2) return values[mid];
  return values[mid - 1] + (values[mid] - values[mid - 1]) / 2;
}

/// "1024,4096" or "1024..16384" (doubling), mixed freely.
std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  std::string item;
  auto number = [](const std::string& s) {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw UsageError("bad size '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  try {
    while (std::getline(in, item, ',')) {
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        sizes.push_back(number(item));
        continue;
      }
      std::size_t lo = number(item.substr(0, dots));
      const std::size_t hi = number(item.substr(dots + 2));
      if (lo == 0 || hi < lo) throw UsageError("bad size range '" + item + "'");
      for (; lo <= hi; lo *= 2) sizes.push_back(lo);
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad --sizes '" + text + "'");
  }
  if (sizes.empty()) throw UsageError("--sizes is empty");
  return sizes;
}

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct InputOptions {
  std::string path;
  GeneratorSpec spec;
  std::size_t count = 1;
};

void add_generator_flags(CLI::App* cmd, GeneratorSpec& spec) {
  cmd->add_option("--n", spec.n, "Number of sites, or fixture size");
  cmd->add_option("--box", spec.box, "Side of the square holding the sites");
  cmd->add_option("--rmin", spec.rmin, "Smallest radius (tg-sites)");
  cmd->add_option("--rmax", spec.rmax, "Largest radius (tg-sites)");
  cmd->add_option("--seed", spec.seed, "Random seed");
}

void check_fixture_size(const GeneratorSpec& spec) {
  if (spec.kind != "petersen" && spec.n == 0) throw UsageError(spec.kind + " needs a size (--n)");
}

}  // namespace

Problem parse_problem(std::string_view name) {
  if (name == "triangle") return Problem::Triangle;
  if (name == "girth") return Problem::Girth;
  if (name == "tg-triangle") return Problem::TgTriangle;
  throw UsageError("unknown problem '" + std::string(name) + "'");
}

std::string_view to_string(Problem problem) noexcept {
  switch (problem) {
    case Problem::Triangle: return "triangle";
    case Problem::Girth: return "girth";
    case Problem::TgTriangle: return "tg-triangle";
  }
  return "?";
}

json ResultRecord::to_json() const {
  json j{{"command", command},
         {"problem", std::string(to_string(problem))},
         {"input", input},
         {"outcome", outcome}};
  if (witness) j["witness"] = *witness;
  if (reason) j["reason"] = *reason;
  if (planarity) j["planarity"] = *planarity;
  if (girth) j["girth"] = *girth;
  j["construction_ns"] = construction_ns;
  j["query_ns"] = query_ns;
  j["counters"] = counters;
  if (verdict) j["verdict"] = *verdict;
  if (detail) j["detail"] = *detail;
  return j;
}

std::optional<NotInDomain> ResultRecord::rejection() const {
  if (outcome != "NotInDomain") return std::nullopt;
  NotInDomain reject{DomainReason::HighDegreeNoTriangle, witness.value_or(std::vector<Vertex>{})};
  bool known = false;
  for (DomainReason r : {DomainReason::HighDegreeNoTriangle, DomainReason::NonPlanarTriangleFree,
                         DomainReason::UniSubgraphCyclic, DomainReason::HighBiDegreeNoTriangle}) {
    if (reason && to_string(r) == *reason) {
      reject.reason = r;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown reason " + reason.value_or(""));
  for (PlanarityFailure f : {PlanarityFailure::EdgeBound, PlanarityFailure::LeftRightConflict}) {
    if (planarity && to_string(f) == *planarity) reject.planarity = f;
  }
  return reject;
}

ResultRecord ResultRecord::from_json(const json& j) {
  static const std::vector<std::string> outcomes{"Triangle", "TriangleFree", "Girth", "NoCycle",
                                                 "NotInDomain"};
  ResultRecord r;
  try {
    r.command = j.at("command").get<std::string>();
    r.problem = parse_problem(j.at("problem").get<std::string>());
    r.input = j.at("input");
    r.outcome = j.at("outcome").get<std::string>();
    if (j.contains("witness")) r.witness = j["witness"].get<std::vector<Vertex>>();
    if (j.contains("reason")) r.reason = j["reason"].get<std::string>();
    if (j.contains("planarity")) r.planarity = j["planarity"].get<std::string>();
    if (j.contains("girth")) r.girth = j["girth"].get<std::size_t>();
    r.construction_ns = j.at("construction_ns").get<std::uint64_t>();
    r.query_ns = j.at("query_ns").get<std::uint64_t>();
    r.counters = j.at("counters").get<std::map<std::string, std::uint64_t>>();
    if (j.contains("verdict")) r.verdict = j["verdict"].get<std::string>();
    if (j.contains("detail")) r.detail = j["detail"].get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
  if (std::find(outcomes.begin(), outcomes.end(), r.outcome) == outcomes.end()) {
    throw std::invalid_argument("malformed record: unknown outcome " + r.outcome);
  }
  const bool needs_witness = r.outcome == "Triangle" || r.outcome == "Girth" || r.outcome == "NotInDomain";
  if (needs_witness != r.witness.has_value()) {
    throw std::invalid_argument("malformed record: witness presence does not match " + r.outcome);
  }
  if ((r.outcome == "NotInDomain") != r.reason.has_value()) {
    throw std::invalid_argument("malformed record: reason presence does not match " + r.outcome);
  }
  if ((r.outcome == "Girth") != r.girth.has_value()) {
    throw std::invalid_argument("malformed record: girth presence does not match " + r.outcome);
  }
  r.rejection();
  return r;
}

json GeneratorSpec::describe() const {
  json j{{"generator", kind}};
  if (kind != "petersen") j["n"] = n;
  if (is_sites_kind(kind)) {
    j["box"] = box;
    if (kind == "tg-sites") {
      j["rmin"] = rmin;
      j["rmax"] = rmax;
    }
    j["seed"] = seed;
  }
  return j;
}

bool is_sites_kind(std::string_view kind) { return kind == "udg-sites" || kind == "tg-sites"; }

SiteSet generate_sites(const GeneratorSpec& spec) {
  if (spec.kind == "udg-sites") return random_sites(spec.n, spec.box, {1.0, 1.0}, spec.seed);
  if (spec.kind == "tg-sites") return random_sites(spec.n, spec.box, {spec.rmin, spec.rmax}, spec.seed);
  throw UsageError("'" + spec.kind + "' does not generate sites");
}

AnyGraph generate_fixture(const GeneratorSpec& spec) {
  if (spec.kind == "petersen") return petersen_graph();
  check_fixture_size(spec);
  if (spec.kind == "star") return star_graph(spec.n);
  if (spec.kind == "dicycle") return directed_cycle(spec.n);
  if (spec.kind == "bistar") return bidirected_star(spec.n);
  throw UsageError("unknown generator kind '" + spec.kind + "'");
}

Input load_input(Problem problem, const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot read " + path);
  std::stringstream text;
  text << file.rdbuf();

  // A sites file starts with a lone count, an edge list with "n m kind".
  std::string line;
  std::size_t tokens = 0;
  while (std::getline(text, line)) {
    std::istringstream words(line);
    std::string w;
    while (words >> w) ++tokens;
    if (tokens) break;
  }
  text.clear();
  text.seekg(0);

  Input input{json{{"file", path}}, UndirectedGraph{}, 0};
  const auto start = Clock::now();
  if (tokens == 1) {
    input.graph = graph_for(problem, read_sites(text));
  } else {
    input.graph = read_edge_list(text);
  }
  input.construction_ns = nanos_since(start);
  return input;
}

Input generate_input(Problem problem, const GeneratorSpec& spec) {
  Input input{spec.describe(), UndirectedGraph{}, 0};
  if (is_sites_kind(spec.kind)) {
    const SiteSet sites = generate_sites(spec);
    const auto start = Clock::now();
    input.graph = graph_for(problem, sites);
    input.construction_ns = nanos_since(start);
  } else {
    const auto start = Clock::now();
    input.graph = generate_fixture(spec);
    input.construction_ns = nanos_since(start);
  }
  return input;
}

Solution solve(Problem problem, const Input& input) {
  ResultRecord r;
  r.command = "solve";
  r.problem = problem;
  r.input = input.descriptor;
  r.construction_ns = input.construction_ns;

  switch (problem) {
    case Problem::Triangle: {
      const auto& g = undirected_input(input, problem);
      TriangleCounters c;
      const auto start = Clock::now();
      TriangleOutcome out = find_triangle_udg(g, &c);
      r.query_ns = nanos_since(start);
      describe(r, out);
      r.counters = {{"pair_tests", c.pair_tests},
                    {"entries_scanned", c.entries_scanned},
                    {"max_pair_tests_per_vertex", c.max_pair_tests_per_vertex},
                    {"high_degree_branch", c.high_degree_branch}};
      return {std::move(r), std::move(out)};
    }
    case Problem::Girth: {
      const auto& g = undirected_input(input, problem);
      const auto start = Clock::now();
      GirthOutcome out = girth_udg(g);
      r.query_ns = nanos_since(start);
      describe(r, out);
      return {std::move(r), std::move(out)};
    }
    case Problem::TgTriangle: {
      const auto& d = directed_input(input, problem);
      DirectedTriangleCounters c;
      const auto start = Clock::now();
      DirectedTriangleOutcome out = find_directed_triangle(d, &c);
      r.query_ns = nanos_since(start);
      describe(r, out);
      r.counters = {{"intersections", c.intersections},
                    {"entries_scanned", c.entries_scanned},
                    {"max_list_traversals", c.max_list_traversals},
                    {"high_bidegree_branch", c.high_bidegree_branch}};
      return {std::move(r), std::move(out)};
    }
  }
  throw UsageError("unknown problem");
}

void verify(const Input& input, Solution& solution) {
  solution.record.command = "verify";
  const std::size_t n = std::visit([](const auto& g) { return g.num_vertices(); }, input.graph);
  if (n > oracle::kMaxVertices) throw oracle::OracleSizeError(n, oracle::kMaxVertices);
  const auto problem = std::visit(
      Overloaded{
          [&](const TriangleOutcome& o) {
            return verify::check_outcome(undirected_input(input, Problem::Triangle), o);
          },
          [&](const GirthOutcome& o) {
            return verify::check_outcome(undirected_input(input, Problem::Girth), o);
          },
          [&](const DirectedTriangleOutcome& o) {
            return verify::check_outcome(directed_input(input, Problem::TgTriangle), o);
          },
      },
      solution.outcome);
  solution.record.verdict = problem ? "fail" : "pass";
  if (problem) solution.record.detail = *problem;
}

int exit_code_for(const ResultRecord& record) noexcept { return record.outcome == "NotInDomain" ? 2 : 0; }

SiteSet bench_sites(Problem problem, std::size_t n, std::uint64_t seed) {
  const double spread = 2.0 * std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)));
  switch (problem) {
    case Problem::Triangle: return random_sites(n, 1.0, {1.0, 1.0}, seed);
    case Problem::Girth: return random_sites(n, spread, {1.0, 1.0}, seed);
    case Problem::TgTriangle: return random_sites(n, spread, {0.5, 2.0}, seed);
  }
  throw UsageError("unknown problem");
}

std::vector<BenchRow> bench(Problem problem, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                            std::size_t reps) {
  if (reps == 0) throw UsageError("--reps must be positive");
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw UsageError("--sizes must be ascending");
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    const SiteSet sites = bench_sites(problem, n, seed);
    std::vector<std::uint64_t> construction, query;
    BenchRow row;
    for (std::size_t rep = 0; rep < reps; ++rep) {
      Input input{json::object(), UndirectedGraph{}, 0};
      const auto start = Clock::now();
      input.graph = graph_for(problem, sites);
      input.construction_ns = nanos_since(start);
      const Solution s = solve(problem, input);
      construction.push_back(input.construction_ns);
      query.push_back(s.record.query_ns);
      if (rep == 0) {
        row.n = n;
        row.m = edge_count(input.graph);
        row.outcome = s.record.outcome;
        row.counters = s.record.counters;
      } else if (row.outcome != s.record.outcome || row.counters != s.record.counters) {
        throw std::logic_error("repetitions disagree at n = " + std::to_string(n));
      }
    }
    row.construction_ns = median(construction);
    row.query_ns = median(query);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,m,construction_ns,query_ns,outcome";
  if (!rows.empty()) {
    for (const auto& [name, value] : rows.front().counters) out << ',' << name;
  }
  out << '\n';
  for (const BenchRow& row : rows) {
    out << row.n << ',' << row.m << ',' << row.construction_ns << ',' << row.query_ns << ',' << row.outcome;
    for (const auto& [name, value] : row.counters) out << ',' << value;
    out << '\n';
  }
}

double query_slope(Problem problem, const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("slope needs at least two sizes");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchRow& row : rows) {
    const double size = problem == Problem::TgTriangle ? static_cast<double>(row.n + row.m)
                                                        : static_cast<double>(row.n);
    const double x = std::log(size);
    const double y = std::log(static_cast<double>(std::max<std::uint64_t>(row.query_ns, 1)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(rows.size());
  const double denom = k * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("slope needs distinct sizes");
  return (k * sxy - sx * sy) / denom;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust triangle and girth algorithms for unit disk and transmission graphs"};
  app.require_subcommand(1);

  GeneratorSpec gen_spec;
  std::string gen_output = "-", gen_graph_output;
  std::size_t gen_size = 0;
  auto* gen = app.add_subcommand("gen", "Write generated sites or a fixture graph");
  gen->add_option("kind", gen_spec.kind, "udg-sites, tg-sites, star, petersen, dicycle or bistar")->required();
  gen->add_option("size", gen_size, "Fixture size, same as --n");
  add_generator_flags(gen, gen_spec);
  gen->add_option("--output", gen_output, "Sites or edge-list file ('-' for stdout)");
  gen->add_option("--graph-output", gen_graph_output, "Also write the graph built from generated sites");

  std::string problem_name;
  InputOptions solve_in;
  std::string solve_output = "-";
  auto* solve_cmd = app.add_subcommand("solve", "Run a robust algorithm and print one JSON line");
  solve_cmd->add_option("--problem", problem_name, "triangle, girth or tg-triangle")->required();
  auto* solve_file = solve_cmd->add_option("--input", solve_in.path, "Edge-list or sites file");
  auto* solve_gen = solve_cmd->add_option("--gen", solve_in.spec.kind, "Generate the input instead");
  solve_file->excludes(solve_gen);
  add_generator_flags(solve_cmd, solve_in.spec);
  solve_cmd->add_option("--output", solve_output, "JSON output file ('-' for stdout)");

  InputOptions verify_in;
  std::string verify_output = "-";
  auto* verify_cmd = app.add_subcommand("verify", "Check robust results against brute-force oracles");
  verify_cmd->add_option("--problem", problem_name, "triangle, girth or tg-triangle")->required();
  auto* verify_file = verify_cmd->add_option("--input", verify_in.path, "Edge-list or sites file");
  auto* verify_gen = verify_cmd->add_option("--gen", verify_in.spec.kind, "Generate the input instead");
  verify_file->excludes(verify_gen);
  add_generator_flags(verify_cmd, verify_in.spec);
  verify_cmd->add_option("--count", verify_in.count, "Generated instances, seeds seed .. seed+count-1");
  verify_cmd->add_option("--output", verify_output, "JSON output file ('-' for stdout)");

  std::string sizes_text;
  std::uint64_t bench_seed = 1;
  std::size_t reps = 5;
  std::string bench_output = "-";
  auto* bench_cmd = app.add_subcommand("bench", "Time a problem over a family of growing inputs");
  bench_cmd->add_option("--problem", problem_name, "triangle, girth or tg-triangle")->required();
  bench_cmd->add_option("--sizes", sizes_text, "Comma list; a..b doubles from a to b")->required();
  bench_cmd->add_option("--seed", bench_seed, "Random seed");
  bench_cmd->add_option("--reps", reps, "Repetitions per size");
  bench_cmd->add_option("--output", bench_output, "CSV output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  auto load = [&](Problem problem, const InputOptions& in) {
    if (!in.path.empty()) return load_input(problem, in.path);
    if (in.spec.kind.empty()) throw UsageError("give --input or --gen");
    return generate_input(problem, in.spec);
  };

  try {
    if (*gen) {
      if (gen_size) gen_spec.n = gen_size;
      OutputTarget target(gen_output, out);
      if (is_sites_kind(gen_spec.kind)) {
        if (gen_spec.n == 0) throw UsageError(gen_spec.kind + " needs --n");
        const SiteSet sites = generate_sites(gen_spec);
        write_sites(target.get(), sites);
        if (!gen_graph_output.empty()) {
          OutputTarget graph_target(gen_graph_output, out);
          if (gen_spec.kind == "udg-sites") {
            write_edge_list(graph_target.get(), unit_disk_graph(sites));
          } else {
            write_edge_list(graph_target.get(), transmission_graph(sites));
          }
        }
      } else {
        std::visit([&](const auto& g) { write_edge_list(target.get(), g); }, generate_fixture(gen_spec));
      }
      return 0;
    }
    const Problem problem = parse_problem(problem_name);
    if (*solve_cmd) {
      OutputTarget target(solve_output, out);
      const Solution s = solve(problem, load(problem, solve_in));
      target.get() << s.record.to_json().dump() << '\n';
      return exit_code_for(s.record);
    }
    if (*verify_cmd) {
      OutputTarget target(verify_output, out);
      const bool generated = verify_in.path.empty();
      const std::size_t count = generated ? verify_in.count : 1;
      bool all_pass = true;
      for (std::size_t i = 0; i < count; ++i) {
        InputOptions one = verify_in;
        one.spec.seed = verify_in.spec.seed + i;
        const Input input = load(problem, one);
        Solution s = solve(problem, input);
        verify(input, s);
        all_pass = all_pass && *s.record.verdict == "pass";
        target.get() << s.record.to_json().dump() << '\n';
      }
      return all_pass ? 0 : 3;
    }
    if (*bench_cmd) {
      OutputTarget target(bench_output, out);
      const auto rows = bench(problem, parse_sizes(sizes_text), bench_seed, reps);
      write_csv(target.get(), rows);
      if (rows.size() >= 2) {
        err << "log-log slope of query_ns against " << (problem == Problem::TgTriangle ? "n+m" : "n")
            << ": " << query_slope(problem, rows) << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace robustgraph::cli
