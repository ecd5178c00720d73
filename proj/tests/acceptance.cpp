// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>

#include "bst/bench.hpp"
#include "bst/canonical.hpp"
#include "bst/report.hpp"
#include "support.hpp"

using namespace bst;
using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Counters shared by every checked run.
struct Tally {
  std::size_t runs = 0;
  std::size_t weight_failures = 0;
  std::size_t invariant_failures = 0;
  std::size_t frontier_records = 0;
  std::size_t frontier_violations = 0;
  std::size_t stage_violations = 0;
  std::string first_problem;

  void fail(std::size_t& counter, const std::string& what) {
    ++counter;
    if (first_problem.empty()) first_problem = what;
  }
};

std::set<Index> unrelated(const ColoredInstance& inst, std::span<const Index> labels, Index p) {
  std::set<Index> out;
  for (std::size_t q = 0; q < inst.size(); ++q) {
    if (labels[q] != labels[static_cast<std::size_t>(p)] && inst.ranks()[q] != inst.rank(p)) out.insert(static_cast<Index>(q));
  }
  return out;
}

// Union of the canonical sets equals the unrelated set for every point at
// every stage partition of the instance. With more than two colors the
// partitions come from the instance recolored by color parity.
bool decomposition_matches(const ColoredInstance& inst) {
  std::vector<int> parity(inst.ranks().begin(), inst.ranks().end());
  for (int& c : parity) c &= 1;
  const ColoredInstance two(std::vector<Point>(inst.points().begin(), inst.points().end()), parity);
  for (const auto& labels : staged_partitions(two, Objective::Min)) {
    for (std::size_t p = 0; p < inst.size(); ++p) {
      std::set<Index> all;
      for (const auto& s : canonical_decomposition(inst, labels, static_cast<Index>(p))) all.insert(s.begin(), s.end());
      if (all != unrelated(inst, labels, static_cast<Index>(p))) return false;
    }
  }
  return true;
}

void check_tree(Tally& t, const ColoredInstance& inst, Objective obj, const SpanningTree& tree, const RunStats& stats,
                double want, const std::string& tag) {
  ++t.runs;
  if (!rel_equal(tree.total_weight, want)) {
    t.fail(t.weight_failures, tag + ": weight " + format_length(tree.total_weight) + " vs " + format_length(want));
  }
  if (const std::string p = tree_problem(inst, tree); !p.empty()) t.fail(t.invariant_failures, tag + ": " + p);
  if (!extremal_vertex_property(inst, tree, obj)) t.fail(t.invariant_failures, tag + ": extremal vertex property");
  if (obj == Objective::Max && !hull_property(inst, tree)) t.fail(t.invariant_failures, tag + ": hull property");
  if (stats.stages > ceil_log2(inst.size())) t.fail(t.stage_violations, tag + ": too many stages");
  for (const StageRecord& r : stats.stage_log) {
    for (const FrontierRecord& f : r.frontiers) {
      if (f.farthest) continue;
      ++t.frontier_records;
      if (f.total > 6 * f.red_count) t.fail(t.frontier_violations, tag + ": frontier sum above 6|R|");
    }
  }
}

std::string tag_of(const char* what, int trial, std::size_t n, std::size_t k, Objective obj, Strategy s) {
  return std::string(what) + " #" + std::to_string(trial) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
         " " + std::string(obj == Objective::Min ? "min" : "max") + " " + std::string(to_string(s));
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  Tally all;
  std::size_t decomposition_failures = 0, union_failures = 0, instances = 0;

  // 1. Two colors against the oracle.
  Tally two;
  const auto t1 = Clock::now();
  std::mt19937_64 rng1(20240601);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng1() % 63;
    const auto inst = random_instance(rng1, n, 2);
    for (Objective obj : {Objective::Min, Objective::Max}) {
      const double want = oracle::brute_multipartite_mst(inst, obj).total_weight;
      for (Strategy s : {Strategy::Structural, Strategy::Canonical}) {
        RunStats stats;
        const SpanningTree tree = bst_tree(inst, obj, s, &stats);
        check_tree(two, inst, obj, tree, stats, want, tag_of("two-color", trial, n, 2, obj, s));
      }
    }
  }
  const double secs1 = seconds_since(t1);
  report(1, two.weight_failures == 0 && secs1 < 120,
         std::to_string(two.runs) + " runs, " + std::to_string(two.weight_failures) + " weight mismatches, " +
             format_length(secs1) + " s" + (two.first_problem.empty() ? "" : "; " + two.first_problem));

  // Invariant-only checks on the same kind of instances (decomposition).
  std::mt19937_64 rngd(20240602);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(rngd, 2 + rngd() % 63, 2 + rngd() % 4);
    ++instances;
    if (!decomposition_matches(inst)) ++decomposition_failures;
  }

  // 2. k colors against the oracle.
  Tally many;
  std::mt19937_64 rng2(20240603);
  const std::size_t ks[] = {3, 4, 5, 8};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = ks[trial % 4];
    const std::size_t n = std::max<std::size_t>(k, 3 + rng2() % 46);
    const auto inst = random_instance(rng2, n, k);
    for (Objective obj : {Objective::Min, Objective::Max}) {
      const double want = oracle::brute_multipartite_mst(inst, obj).total_weight;
      const UnionGraph g = build_union_graph(inst, obj);
      if (g.edges.size() > (n - 1) * ceil_log2(k)) ++union_failures;
      for (Strategy s : {Strategy::Structural, Strategy::Canonical}) {
        RunStats stats;
        const SpanningTree tree = obj == Objective::Min ? min_k_st(inst, s, &stats) : max_k_st(inst, s, &stats);
        check_tree(many, inst, obj, tree, stats, want, tag_of("k-color", trial, n, k, obj, s));
      }
    }
  }
  report(2, many.weight_failures == 0,
         std::to_string(many.runs) + " runs, " + std::to_string(many.weight_failures) + " weight mismatches" +
             (many.first_problem.empty() ? "" : "; " + many.first_problem));

  // 8 is computed before 3-5 so its runs count toward them too.
  Tally degen;
  std::mt19937_64 rng8(20240604);
  std::size_t degen_instances = 0;
  auto run_degenerate = [&](const ColoredInstance& inst, const char* what, int trial) {
    ++degen_instances;
    for (Objective obj : {Objective::Min, Objective::Max}) {
      const double want = oracle::brute_multipartite_mst(inst, obj).total_weight;
      for (Strategy s : {Strategy::Structural, Strategy::Canonical}) {
        RunStats stats;
        const SpanningTree tree = spanning_tree(inst, obj, s, &stats);
        check_tree(degen, inst, obj, tree, stats, want, tag_of(what, trial, inst.size(), inst.num_colors(), obj, s));
      }
    }
  };
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = trial % 3 == 0 ? 3 : 2;
    run_degenerate(collinear_instance(rng8, std::max<std::size_t>(k, 2 + rng8() % 40), k), "collinear", trial);
    run_degenerate(grid_instance(rng8, 2 + rng8() % 8, 2 + rng8() % 8, k), "grid", trial);
  }
  // Cocircular quadruples: the four corners of squares and rectangles plus
  // four points on a lattice circle, every two-coloring with both colors.
  const std::vector<std::vector<Point>> quads = {
      {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 0}, {3, 0}, {3, 1}, {0, 1}}, {{5, 0}, {-5, 0}, {3, 4}, {-4, -3}},
      {{0, 1}, {1, 0}, {0, -1}, {-1, 0}}};
  int qtrial = 0;
  for (const auto& q : quads) {
    for (int mask = 1; mask < 15; ++mask) {
      std::vector<int> colors(4);
      for (int i = 0; i < 4; ++i) colors[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      run_degenerate(ColoredInstance(q, colors), "cocircular", qtrial++);
    }
    run_degenerate(ColoredInstance(q, {0, 1, 2, 0}), "cocircular", qtrial++);
  }
  // Degenerate instances also feed the decomposition check.
  std::mt19937_64 rngg(20240605);
  for (int trial = 0; trial < 20; ++trial) {
    ++instances;
    if (!decomposition_matches(grid_instance(rngg, 2 + rngg() % 6, 2 + rngg() % 6, 2 + trial % 3))) {
      ++decomposition_failures;
    }
  }

  for (const Tally* t : {&two, &many, &degen}) {
    all.runs += t->runs;
    all.invariant_failures += t->invariant_failures;
    all.frontier_records += t->frontier_records;
    all.frontier_violations += t->frontier_violations;
    all.stage_violations += t->stage_violations;
    if (all.first_problem.empty() && (t->invariant_failures || t->frontier_violations || t->stage_violations)) {
      all.first_problem = t->first_problem;
    }
  }

  report(3, all.invariant_failures == 0 && decomposition_failures == 0 && union_failures == 0,
         std::to_string(all.runs) + " trees, " + std::to_string(all.invariant_failures) + " tree invariant failures, " +
             std::to_string(decomposition_failures) + "/" + std::to_string(instances) +
             " decomposition mismatches, " + std::to_string(union_failures) + " union-graph bound violations" +
             (all.first_problem.empty() ? "" : "; " + all.first_problem));
  report(4, all.frontier_violations == 0 && all.frontier_records > 0,
         std::to_string(all.frontier_records) + " nearest frontier computations, " +
             std::to_string(all.frontier_violations) + " above 6|R|");
  report(5, all.stage_violations == 0,
         std::to_string(all.runs) + " runs, " + std::to_string(all.stage_violations) + " above ceil(log2 n)");

  // 6. Scaling.
  {
    BenchConfig config;
    config.sizes = {1u << 13, 1u << 14, 1u << 15, 1u << 16, 1u << 17};
    config.strategies = {Strategy::Structural};
    config.reps = 3;
    config.seed = 6;
    const auto rows = run_bench(config);
    const double exponent = fitted_exponent(rows, Strategy::Structural);
    const double largest = rows.back().median_ms / 1000.0;

    const auto inst = generate_instance(1u << 14, 2, 7);
    const auto t6 = Clock::now();
    min_bst(inst, Strategy::Canonical);
    const double canonical = seconds_since(t6);

    std::string times;
    for (const BenchRow& r : rows) times += " " + format_length(r.median_ms);
    report(6, exponent <= 1.35 && largest < 30 && canonical < 60,
           "structural exponent " + format_length(exponent) + " (ms:" + times + "), 2^17 in " +
               format_length(largest) + " s, canonical 2^14 in " + format_length(canonical) + " s");
  }

  // 7. Structural vs brute at 4096.
  {
    BenchConfig config;
    config.sizes = {4096};
    config.strategies = {Strategy::Structural, Strategy::Brute};
    config.reps = 5;
    config.seed = 8;
    const auto rows = run_bench(config);
    const double speedup = rows[1].median_ms / rows[0].median_ms;
    report(7, speedup >= 5,
           "structural " + format_length(rows[0].median_ms) + " ms, brute " + format_length(rows[1].median_ms) +
               " ms, speedup " + format_length(speedup));
  }

  report(8, degen.weight_failures == 0 && degen.invariant_failures == 0,
         std::to_string(degen_instances) + " instances, " + std::to_string(degen.runs) + " runs, " +
             std::to_string(degen.weight_failures) + " weight mismatches, " +
             std::to_string(degen.invariant_failures) + " invariant failures" +
             (degen.first_problem.empty() ? "" : "; " + degen.first_problem));

  return failures == 0 ? 0 : 1;
}
