#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bst/canonical.hpp"
#include "bst/error.hpp"
#include "support.hpp"

using namespace bst;
using namespace testing;

namespace {

std::set<Index> unrelated(const ColoredInstance& inst, const std::vector<Index>& labels, Index p) {
  std::set<Index> out;
  for (Index q = 0; q < static_cast<Index>(inst.size()); ++q) {
    if (inst.rank(q) != inst.rank(p) && labels[static_cast<std::size_t>(q)] != labels[static_cast<std::size_t>(p)]) {
      out.insert(q);
    }
  }
  return out;
}

std::size_t components_of(const std::vector<Index>& labels) {
  return std::set<Index>(labels.begin(), labels.end()).size();
}

}  // namespace

TEST_CASE("decomposition covers exactly the unrelated points") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 40, k = 2 + rng() % std::min<std::size_t>(n - 1, 7);
    const auto inst = random_instance(rng, n, k);
    const auto labels = random_labels(rng, n, 1 + rng() % std::min<std::size_t>(n, 9));
    const std::size_t expected_sets = ceil_log2(components_of(labels)) * ceil_log2(inst.num_colors());
    for (Index p = 0; p < static_cast<Index>(n); ++p) {
      const auto sets = canonical_decomposition(inst, labels, p);
      CHECK(sets.size() == expected_sets);
      CHECK(canonical_indices(inst, labels, p).size() == expected_sets);
      std::set<Index> all;
      for (const auto& s : sets) all.insert(s.begin(), s.end());
      CHECK(all == unrelated(inst, labels, p));
    }
  }
}

TEST_CASE("decomposition examples") {
  const ColoredInstance two({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {0, 1, 0, 1});
  const std::vector<Index> halves = {0, 0, 1, 1};
  const auto sets = canonical_decomposition(two, halves, 0);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0] == std::vector<Index>{3});
  const auto idx = canonical_indices(two, halves, 0);
  CHECK(idx[0] == CanonicalIndex{0, 1, 0, 1});

  std::mt19937_64 rng(42);
  const auto four = random_instance(rng, 30, 4);
  std::vector<Index> labels(30);
  for (std::size_t i = 0; i < 30; ++i) labels[i] = static_cast<Index>(i % 4);
  for (Index p = 0; p < 30; ++p) CHECK(canonical_decomposition(four, labels, p).size() == 4);

  const auto k2 = random_instance(rng, 30, 2);
  for (Index p = 0; p < 30; ++p) CHECK(canonical_decomposition(k2, labels, p).size() == 2);

  // Labels need not be dense; out-of-range labels are rejected.
  const std::vector<Index> sparse = {3, 3, 0, 0};
  CHECK(canonical_decomposition(two, sparse, 0)[0] == std::vector<Index>{3});
  CHECK_THROWS_AS(canonical_decomposition(two, std::vector<Index>{0, 0, 9, 1}, 0), Error);
  CHECK_THROWS_AS(all_extreme_unrelated(two, std::vector<Index>{0, -1, 0, 1}, Objective::Min), Error);
  CHECK_THROWS_AS(all_extreme_unrelated(two, std::vector<Index>{0, 1}, Objective::Min), Error);
}

TEST_CASE("all_extreme_unrelated matches the brute scan") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const bool grid = trial % 5 == 0;
    const std::size_t k = std::vector<std::size_t>{2, 3, 5}[trial % 3];
    const auto inst = grid ? grid_instance(rng, 3 + rng() % 4, 3 + rng() % 4, k) : random_instance(rng, 20, k);
    const auto labels = random_labels(rng, inst.size(), trial % 7 == 0 ? 1 : 4);
    for (Objective obj : {Objective::Min, Objective::Max}) {
      std::size_t built = 0;
      const auto got = all_extreme_unrelated(inst, labels, obj, &built);
      const auto want = oracle::brute_extreme_unrelated(inst, labels, obj);
      REQUIRE(got.size() == want.size());
      for (std::size_t p = 0; p < got.size(); ++p) {
        REQUIRE(got[p].has_value() == want[p].has_value());
        if (got[p]) {
          CHECK(got[p]->index == want[p]->index);
          CHECK(got[p]->sq_length == want[p]->sq_length);
        }
      }
      const std::size_t c = components_of(labels);
      CHECK(built <= 4 * ceil_log2(c) * ceil_log2(inst.num_colors()));
      if (c == 1) CHECK(built == 0);
    }
  }
}

TEST_CASE("two points in two components are each other's partner") {
  const ColoredInstance inst({{0, 0}, {3, 4}}, {0, 1});
  for (Objective obj : {Objective::Min, Objective::Max}) {
    const auto got = all_extreme_unrelated(inst, std::vector<Index>{0, 1}, obj);
    CHECK(got[0]->index == 1);
    CHECK(got[1]->index == 0);
    CHECK(got[0]->sq_length == 25.0);
  }
}

TEST_CASE("canonical stage solver drives the engine to the optimum") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 50, k = 2 + rng() % std::min<std::size_t>(n - 1, 6);
    const auto inst = random_instance(rng, n, k);
    for (Objective obj : {Objective::Min, Objective::Max}) {
      std::size_t built = 0;
      RunStats stats;
      const SpanningTree t = run_boruvka(inst, canonical_stage_solver(inst, obj, &built), obj, {}, &stats);
      CHECK(tree_problem(inst, t).empty());
      CHECK(rel_equal(t.total_weight, oracle::brute_multipartite_mst(inst, obj).total_weight));
      CHECK(stats.stages <= ceil_log2(n));
      CHECK((n == 2 || built > 0));
    }
  }
}
