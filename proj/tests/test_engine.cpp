#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bst/error.hpp"
#include "support.hpp"

using namespace bst;
using namespace testing;

namespace {

// Brute per-component extreme edges.
StageSolver brute_solver(const ColoredInstance& instance, Objective objective) {
  return [&instance, objective](const StageView& view) {
    const auto partners = oracle::brute_extreme_unrelated(instance, view.labels, objective);
    const EdgeOrder order(instance.points(), objective);
    std::vector<std::optional<Edge>> answers(view.components);
    for (std::size_t p = 0; p < partners.size(); ++p) {
      if (!partners[p]) continue;
      const Edge e{static_cast<Index>(p), partners[p]->index, partners[p]->sq_length};
      auto& slot = answers[static_cast<std::size_t>(view.labels[p])];
      if (!slot || order.better(e, *slot)) slot = e;
    }
    return answers;
  };
}

}  // namespace

TEST_CASE("union-find") {
  UnionFind uf(6);
  CHECK(uf.sets() == 6);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(2, 3));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.unite(1, 3));
  CHECK(uf.find(0) == uf.find(2));
  CHECK(uf.sets() == 3);
  CHECK(uf.labels() == std::vector<Index>{0, 0, 0, 0, 1, 2});
}

TEST_CASE("ceil_log2") {
  CHECK(ceil_log2(0) == 0);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(1024) == 10);
  CHECK(ceil_log2(1025) == 11);
}

TEST_CASE("edge order is a strict total order") {
  const std::vector<Point> p = {{0, 0}, {1, 0}, {0, 1}, {2, 0}};
  const EdgeOrder min(p, Objective::Min), max(p, Objective::Max);
  const Edge a = min.make(0, 1), b = min.make(0, 2), c = min.make(0, 3), d = min.make(2, 0);
  CHECK(min.better(a, b));  // equal length, (0,1) before (0,2)
  CHECK_FALSE(min.better(b, a));
  CHECK(min.better(b, c));
  CHECK(max.better(c, a));
  CHECK(max.better(a, b));  // ties break the same way for both objectives
  CHECK_FALSE(min.better(b, d));
  CHECK_FALSE(min.better(d, b));
}

TEST_CASE("engine with a brute solver reproduces the oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 40, k = 2 + rng() % std::min<std::size_t>(n - 1, 5);
    const auto inst = trial % 4 == 0 ? grid_instance(rng, 2 + rng() % 5, 2 + rng() % 5, 2) : random_instance(rng, n, k);
    for (Objective obj : {Objective::Min, Objective::Max}) {
      RunStats stats;
      const SpanningTree t = run_boruvka(inst, brute_solver(inst, obj), obj, {}, &stats);
      CHECK(tree_problem(inst, t).empty());
      CHECK(rel_equal(t.total_weight, oracle::brute_multipartite_mst(inst, obj).total_weight));
      CHECK(stats.stages <= ceil_log2(inst.size()));
      CHECK(stats.initial_components == inst.size());
      CHECK(stats.stage_log.size() == stats.stages);
    }
  }
}

TEST_CASE("engine applies tied proposals once") {
  // Two components choose the same edge; a single union must result.
  const ColoredInstance inst({{0, 0}, {1, 0}}, {0, 1});
  const SpanningTree t = run_boruvka(inst, brute_solver(inst, Objective::Min), Objective::Min);
  CHECK(t.edges.size() == 1);
  CHECK(t.total_weight == 1.0);
}

TEST_CASE("engine errors") {
  const ColoredInstance inst({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {0, 1, 0, 1});
  const auto solver = brute_solver(inst, Objective::Min);
  const std::vector<Edge> same_color = {{0, 2, 4}};
  CHECK_THROWS_AS(run_boruvka(inst, solver, Objective::Min, same_color), Error);
  const std::vector<Edge> cycle = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 9}};
  try {
    run_boruvka(inst, solver, Objective::Min, cycle);
    FAIL("expected InvalidSeed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSeed);
  }
  const StageSolver silent = [](const StageView& v) { return std::vector<std::optional<Edge>>(v.components); };
  try {
    run_boruvka(inst, silent, Objective::Min);
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
  const std::vector<Edge> seeds = {{0, 1, 1}, {2, 1, 1}, {3, 2, 1}};
  const SpanningTree t = run_boruvka(inst, silent, Objective::Min, seeds);
  CHECK(t.edges.size() == 3);
}

TEST_CASE("oracle basics") {
  const ColoredInstance inst({{0, 0}, {1, 0}, {-1, 0}, {0, 2}}, {0, 1, 1, 1});
  const SpanningTree t = oracle::brute_multipartite_mst(inst, Objective::Min);
  CHECK(t.total_weight == doctest::Approx(4.0));
  for (const TreeEdge& e : t.edges) CHECK(e.u == 0);

  const std::vector<Index> labels = {0, 1, 1, 2};
  const auto partners = oracle::brute_extreme_unrelated(inst, labels, Objective::Max);
  REQUIRE(partners[0]);
  CHECK(partners[0]->index == 3);
  CHECK(partners[0]->sq_length == 4.0);
  REQUIRE(partners[3]);
  CHECK(partners[3]->index == 0);

  const std::vector<Index> one = {0, 0, 0, 0};
  for (const auto& x : oracle::brute_extreme_unrelated(inst, one, Objective::Min)) CHECK_FALSE(x.has_value());
  CHECK_THROWS_AS(oracle::brute_extreme_unrelated(inst, std::vector<Index>{0, 1}, Objective::Min), Error);
}
