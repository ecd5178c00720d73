// Command-line front end: tree, gen, bench.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "bst/bench.hpp"
#include "bst/error.hpp"
#include "bst/instance_io.hpp"
#include "bst/report.hpp"
#include "bst/spanning_trees.hpp"

namespace {

using namespace bst;

// Writes to the named file, or stdout for "" and "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::MonochromaticInput:
    case ErrorCode::TooFewPoints:
      return 2;
    default:
      return 1;
  }
}

struct TreeOptions {
  std::string input;
  std::string objective = "min";
  std::string strategy = "structural";
  std::string output;
  std::string svg;
  bool json = false;
  bool timing = false;
};

int cmd_tree(const TreeOptions& o) {
  const Objective objective = o.objective == "max" ? Objective::Max : Objective::Min;
  const Strategy strategy = *parse_strategy(o.strategy);
  const ColoredInstance instance = read_instance(o.input);

  RunStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  ResultReport report;
  report.tree = spanning_tree(instance, objective, strategy, &stats);
  const auto t1 = std::chrono::steady_clock::now();
  report.n = instance.size();
  report.k = instance.num_colors();
  report.objective = objective;
  report.strategy = strategy;
  report.stages = stats.stages;
  if (o.timing) report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  Sink sink(o.output);
  if (o.json) {
    write_json(sink.get(), report);
  } else {
    write_text(sink.get(), report);
  }
  if (!o.svg.empty()) {
    Sink svg(o.svg);
    write_svg(svg.get(), instance, report.tree);
  }
  return 0;
}

struct GenOptions {
  std::size_t n = 0;
  std::size_t k = 2;
  std::uint64_t seed = 1;
  std::string distribution = "uniform";
  std::string output;
};

int cmd_gen(const GenOptions& o) {
  const ColoredInstance instance = generate_instance(o.n, o.k, o.seed, *parse_distribution(o.distribution));
  Sink sink(o.output);
  sink.get() << "# n=" << o.n << " k=" << o.k << " seed=" << o.seed << " distribution=" << o.distribution << '\n';
  write_instance(sink.get(), instance);
  return 0;
}

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t k = 2;
  std::string objective = "min";
  std::vector<std::string> strategies = {"structural", "canonical", "brute"};
  std::size_t reps = 3;
  std::uint64_t seed = 1;
  std::size_t brute_cap = std::size_t{1} << 13;
  std::string output;
};

int cmd_bench(const BenchOptions& o) {
  BenchConfig config;
  config.sizes = o.sizes;
  config.k = o.k;
  config.objective = o.objective == "max" ? Objective::Max : Objective::Min;
  config.strategies.clear();
  for (const auto& s : o.strategies) config.strategies.push_back(*parse_strategy(s));
  config.reps = o.reps;
  config.seed = o.seed;
  config.brute_cap = o.brute_cap;
  std::vector<std::string> notices;
  const auto rows = run_bench(config, &notices);
  for (const auto& n : notices) std::cerr << "note: " << n << '\n';
  Sink sink(o.output);
  write_bench_table(sink.get(), rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bichromatic and multichromatic Euclidean spanning trees"};
  app.require_subcommand(1);

  const std::vector<std::string> objectives = {"min", "max"};
  const std::vector<std::string> strategies = {"structural", "canonical", "brute"};

  TreeOptions tree;
  auto* tree_cmd = app.add_subcommand("tree", "Compute a spanning tree of an instance file");
  tree_cmd->add_option("--input,-i", tree.input, "Instance file")->required();
  tree_cmd->add_option("--objective", tree.objective, "min or max")->check(CLI::IsMember(objectives));
  tree_cmd->add_option("--k-mode", "Number of colors; only 'auto' (inferred from the file)")
      ->default_val("auto")
      ->check(CLI::IsMember({"auto"}));
  tree_cmd->add_option("--strategy", tree.strategy, "structural, canonical or brute")
      ->check(CLI::IsMember(strategies));
  tree_cmd->add_option("--output,-o", tree.output, "Report file (default stdout)");
  tree_cmd->add_option("--svg", tree.svg, "Also draw the tree into this SVG file");
  tree_cmd->add_flag("--json", tree.json, "Structured JSON report");
  tree_cmd->add_flag("--timing", tree.timing, "Include wall time in the report");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n,-n", gen.n, "Number of points")->required();
  gen_cmd->add_option("--k,-k", gen.k, "Number of colors");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--distribution", gen.distribution, "uniform or clustered")
      ->check(CLI::IsMember({"uniform", "clustered"}));
  gen_cmd->add_option("--output,-o", gen.output, "Output file (default stdout)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time strategies over instance sizes");
  bench_cmd->add_option("--sizes", bench.sizes, "Instance sizes")->required()->delimiter(',');
  bench_cmd->add_option("--k,-k", bench.k, "Number of colors");
  bench_cmd->add_option("--objective", bench.objective, "min or max")->check(CLI::IsMember(objectives));
  bench_cmd->add_option("--strategies", bench.strategies, "Strategies to run")
      ->delimiter(',')
      ->check(CLI::IsMember(strategies));
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per cell");
  bench_cmd->add_option("--seed", bench.seed, "Base random seed");
  bench_cmd->add_option("--brute-cap", bench.brute_cap, "Largest size run with the brute strategy");
  bench_cmd->add_option("--output,-o", bench.output, "Table file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*tree_cmd) return cmd_tree(tree);
    if (*gen_cmd) return cmd_gen(gen);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
