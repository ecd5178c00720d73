#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bst/instance_io.hpp"
#include "bst/spanning_trees.hpp"

namespace bst {

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t k = 2;
  Objective objective = Objective::Min;
  std::vector<Strategy> strategies = {Strategy::Structural, Strategy::Canonical, Strategy::Brute};
  std::size_t reps = 3;
  std::uint64_t seed = 1;
  Distribution distribution = Distribution::Uniform;
  std::size_t brute_cap = std::size_t{1} << 13;  // brute skipped above this size
};

struct BenchRow {
  std::size_t size = 0;
  Strategy strategy = Strategy::Structural;
  double median_ms = 0.0;
  std::size_t stages = 0;
  std::size_t max_frontier = 0;        // largest sum of |T_i| in one frontier computation
  double max_frontier_ratio = 0.0;     // largest sum of |T_i| / |R|
  double ratio = 0.0;                  // time / time at the previous size (0 for the first)
};

/// Runs every (size, strategy) cell on the same generated instance per size.
/// Skipped cells are reported through `notices`.
std::vector<BenchRow> run_bench(const BenchConfig& config, std::vector<std::string>* notices = nullptr);

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows);

/// Least-squares slope of log(time) against log(size) for one strategy.
double fitted_exponent(const std::vector<BenchRow>& rows, Strategy strategy);

}  // namespace bst
