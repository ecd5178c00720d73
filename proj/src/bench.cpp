#include "bst/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "bst/error.hpp"

namespace bst {

std::vector<BenchRow> run_bench(const BenchConfig& config, std::vector<std::string>* notices) {
  if (config.sizes.empty()) throw Error(ErrorCode::InvalidArgument, "no sizes given");
  if (config.reps == 0) throw Error(ErrorCode::InvalidArgument, "reps must be positive");
  std::vector<BenchRow> rows;
  std::map<Strategy, double> previous;
  for (std::size_t size : config.sizes) {
    const ColoredInstance instance = generate_instance(size, config.k, config.seed + size, config.distribution);
    for (Strategy strategy : config.strategies) {
      if (strategy == Strategy::Brute && size > config.brute_cap) {
        if (notices) {
          notices->push_back("brute skipped at n=" + std::to_string(size) + " (cap " +
                             std::to_string(config.brute_cap) + ")");
        }
        continue;
      }
      BenchRow row;
      row.size = size;
      row.strategy = strategy;
      std::vector<double> times;
      for (std::size_t r = 0; r < config.reps; ++r) {
        RunStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        const SpanningTree tree = spanning_tree(instance, config.objective, strategy, &stats);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        row.stages = stats.stages;
        for (const StageRecord& s : stats.stage_log) {
          for (const FrontierRecord& f : s.frontiers) {
            row.max_frontier = std::max(row.max_frontier, f.total);
            if (f.red_count > 0) {
              row.max_frontier_ratio =
                  std::max(row.max_frontier_ratio, static_cast<double>(f.total) / static_cast<double>(f.red_count));
            }
          }
        }
        (void)tree;
      }
      std::sort(times.begin(), times.end());
      const std::size_t m = times.size();
      row.median_ms = m % 2 ? times[m / 2] : (times[m / 2 - 1] + times[m / 2]) / 2;
      if (auto it = previous.find(strategy); it != previous.end() && it->second > 0) {
        row.ratio = row.median_ms / it->second;
      }
      previous[strategy] = row.median_ms;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%10s %-11s %12s %7s %12s %9s %7s\n", "size", "strategy", "median_ms", "stages",
                "max_frontier", "max_T/|R|", "ratio");
  out << buf;
  for (const BenchRow& r : rows) {
    const std::string name(to_string(r.strategy));
    std::snprintf(buf, sizeof buf, "%10zu %-11s %12.3f %7zu %12zu %9.3f %7.3f\n", r.size, name.c_str(), r.median_ms,
                  r.stages, r.max_frontier, r.max_frontier_ratio, r.ratio);
    out << buf;
  }
}

double fitted_exponent(const std::vector<BenchRow>& rows, Strategy strategy) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const BenchRow& r : rows) {
    if (r.strategy != strategy || r.median_ms <= 0) continue;
    const double x = std::log(static_cast<double>(r.size)), y = std::log(r.median_ms);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return 0.0;
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  return denom == 0 ? 0.0 : (static_cast<double>(m) * sxy - sx * sy) / denom;
}

}  // namespace bst
