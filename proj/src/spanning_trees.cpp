#include "bst/spanning_trees.hpp"

#include <algorithm>
#include <memory>

#include "bst/canonical.hpp"
#include "bst/error.hpp"
#include "bst/frontier.hpp"
#include "bst/oracle.hpp"
#include "bst/triangulation.hpp"
#include "bst/union_find.hpp"
#include "spatial.hpp"

namespace bst {
namespace {

// Per-color structures shared by step 1 and the stage solver. Color 0 plays
// red, color 1 blue.
struct ColorStructures {
  std::vector<Index> members[2];
  DelaunayGraph nearest[2];
  FarthestStructure farthest[2];
  std::vector<Index> hull[2];

  ColorStructures(const ColoredInstance& instance, Objective objective) {
    for (int c = 0; c < 2; ++c) {
      members[c] = instance.members(c);
      if (objective == Objective::Min) {
        nearest[c] = build_delaunay(instance.points(), members[c]);
      } else {
        hull[c] = convex_hull(instance.points(), members[c]);
        if (members[c].size() >= 2) farthest[c] = build_farthest(instance.points(), members[c]);
      }
    }
  }

  Index locate(const ColoredInstance& instance, Objective objective, int color, Index p, Index& hint) const {
    if (members[color].size() == 1) return members[color][0];
    if (objective == Objective::Max) return farthest[color].farthest_site(instance.point(p));
    hint = nearest[color].nearest_site(instance.point(p), hint);
    return nearest[color].id(hint);
  }
};

void require_two_colors(const ColoredInstance& instance) {
  if (instance.num_colors() != 2) {
    throw Error(ErrorCode::InvalidArgument, "two-color tree requested for an instance with " +
                                                std::to_string(instance.num_colors()) + " colors");
  }
}

std::vector<Edge> step_one(const ColoredInstance& instance, Objective objective, const ColorStructures& cs) {
  const EdgeOrder order(instance.points(), objective);
  std::vector<Edge> edges;
  edges.reserve(instance.size());
  Index hints[2] = {0, 0};
  for (Index p : detail::spatial_order(instance.points())) {
    const int other = 1 - instance.rank(p);
    const Index q = cs.locate(instance, objective, other, p, hints[other]);
    edges.push_back(order.make(std::min(p, q), std::max(p, q)));
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }),
              edges.end());
  return edges;
}

StageSolver make_structural_solver(const ColoredInstance& instance, Objective objective,
                                   std::shared_ptr<const ColorStructures> cs) {
  return [&instance, objective, cs](const StageView& view) {
    const EdgeOrder order(instance.points(), objective);
    std::vector<std::optional<Edge>> answers(view.components);
    auto merge = [&](const RoleAnswers& role) {
      for (std::size_t c = 0; c < view.components; ++c) {
        const auto& cand = role.pairs[c];
        if (cand && (!answers[c] || order.better(*cand, *answers[c]))) answers[c] = cand;
      }
    };
    for (int red = 0; red < 2; ++red) {
      const int blue = 1 - red;
      const RoleAnswers role =
          objective == Objective::Min
              ? all_blue_bcp(instance, view.labels, view.components, cs->nearest[red], blue)
              : all_blue_bfp(instance, view.labels, view.components, cs->farthest[red], cs->members[red], blue);
      if (view.record) {
        view.record->frontiers.push_back({role.frontier_total, cs->members[red].size(), objective == Objective::Max});
      }
      merge(role);
      if (objective == Objective::Max) {
        merge(hull_vertex_bfp(instance, view.labels, view.components, cs->hull[blue], cs->members[red]));
      }
    }
    return answers;
  };
}

SpanningTree run_strategy(const ColoredInstance& instance, Objective objective, Strategy strategy,
                          RunStats* stats) {
  switch (strategy) {
    case Strategy::Brute: {
      if (stats) *stats = RunStats{};
      return oracle::brute_multipartite_mst(instance, objective);
    }
    case Strategy::Canonical: {
      std::size_t built = 0;
      RunStats local;
      SpanningTree tree =
          run_boruvka(instance, canonical_stage_solver(instance, objective, &built), objective, {}, &local);
      local.structures_built = built;
      if (stats) *stats = std::move(local);
      return tree;
    }
    case Strategy::Structural:
      break;
  }
  require_two_colors(instance);
  auto cs = std::make_shared<const ColorStructures>(instance, objective);
  const std::vector<Edge> seeds = step_one(instance, objective, *cs);
  return run_boruvka(instance, make_structural_solver(instance, objective, cs), objective, seeds, stats);
}

void merge_stats(RunStats& into, RunStats&& from) {
  into.stages = std::max(into.stages, from.stages);
  into.initial_components = std::max(into.initial_components, from.initial_components);
  into.structures_built += from.structures_built;
  for (auto& s : from.stage_log) into.stage_log.push_back(std::move(s));
}

}  // namespace

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::Structural: return "structural";
    case Strategy::Canonical: return "canonical";
    case Strategy::Brute: return "brute";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::Structural, Strategy::Canonical, Strategy::Brute}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

SpanningTree bst_tree(const ColoredInstance& instance, Objective objective, Strategy strategy, RunStats* stats) {
  require_two_colors(instance);
  return run_strategy(instance, objective, strategy, stats);
}

SpanningTree min_bst(const ColoredInstance& instance, Strategy strategy, RunStats* stats) {
  return bst_tree(instance, Objective::Min, strategy, stats);
}

SpanningTree max_bst(const ColoredInstance& instance, Strategy strategy, RunStats* stats) {
  return bst_tree(instance, Objective::Max, strategy, stats);
}

StageSolver structural_stage_solver(const ColoredInstance& instance, Objective objective) {
  require_two_colors(instance);
  return make_structural_solver(instance, objective, std::make_shared<const ColorStructures>(instance, objective));
}

std::vector<Edge> extreme_neighbor_edges(const ColoredInstance& instance, Objective objective) {
  require_two_colors(instance);
  return step_one(instance, objective, ColorStructures(instance, objective));
}

UnionGraph build_union_graph(const ColoredInstance& instance, Objective objective, Strategy strategy,
                             RunStats* stats) {
  const std::size_t bits = ceil_log2(instance.num_colors());
  const std::vector<Point> points(instance.points().begin(), instance.points().end());
  RunStats total;
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < bits; ++j) {
    std::vector<int> bit_colors(instance.size());
    bool seen[2] = {false, false};
    for (std::size_t p = 0; p < instance.size(); ++p) {
      bit_colors[p] = (instance.ranks()[p] >> j) & 1;
      seen[bit_colors[p]] = true;
    }
    if (!seen[0] || !seen[1]) continue;
    const ColoredInstance split(points, std::move(bit_colors));
    RunStats inner;
    const SpanningTree tree = run_strategy(split, objective, strategy, &inner);
    merge_stats(total, std::move(inner));
    for (const TreeEdge& e : tree.edges) {
      if (instance.rank(e.u) == instance.rank(e.v)) continue;
      edges.push_back({e.u, e.v, sq_dist(instance.point(e.u), instance.point(e.v))});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }),
              edges.end());
  if (stats) *stats = std::move(total);
  return {std::move(edges)};
}

namespace {

SpanningTree k_color_tree(const ColoredInstance& instance, Objective objective, Strategy strategy,
                          RunStats* stats) {
  UnionGraph g = build_union_graph(instance, objective, strategy, stats);
  const EdgeOrder order(instance.points(), objective);
  std::sort(g.edges.begin(), g.edges.end(), order);
  UnionFind forest(instance.size());
  std::vector<Edge> chosen;
  for (const Edge& e : g.edges) {
    if (forest.unite(e.u, e.v)) chosen.push_back(e);
  }
  if (forest.sets() != 1) throw Error(ErrorCode::Disconnected, "union graph is disconnected");
  return make_tree(instance.points(), chosen);
}

}  // namespace

SpanningTree min_k_st(const ColoredInstance& instance, Strategy strategy, RunStats* stats) {
  return k_color_tree(instance, Objective::Min, strategy, stats);
}

SpanningTree max_k_st(const ColoredInstance& instance, Strategy strategy, RunStats* stats) {
  return k_color_tree(instance, Objective::Max, strategy, stats);
}

SpanningTree spanning_tree(const ColoredInstance& instance, Objective objective, Strategy strategy,
                           RunStats* stats) {
  if (strategy == Strategy::Brute) return run_strategy(instance, objective, strategy, stats);
  if (instance.num_colors() == 2) return bst_tree(instance, objective, strategy, stats);
  return k_color_tree(instance, objective, strategy, stats);
}

}  // namespace bst
