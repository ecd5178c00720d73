#pragma once

// Shared helpers for the test binaries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bst/boruvka.hpp"
#include "bst/instance.hpp"
#include "bst/oracle.hpp"
#include "bst/spanning_trees.hpp"
#include "bst/triangulation.hpp"
#include "bst/union_find.hpp"

namespace testing {

using namespace bst;

inline bool rel_equal(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// n distinct points in the unit square; colors cover 0..k-1 (first k points
/// get one color each, the rest are random).
inline ColoredInstance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> pts;
  std::set<std::pair<double, double>> seen;
  while (pts.size() < n) {
    const Point p{u(rng), u(rng)};
    if (seen.emplace(p.x, p.y).second) pts.push_back(p);
  }
  std::vector<int> colors(n);
  for (std::size_t i = 0; i < n; ++i) colors[i] = i < k ? static_cast<int>(i) : static_cast<int>(rng() % k);
  std::shuffle(colors.begin(), colors.end(), rng);
  return ColoredInstance(std::move(pts), std::move(colors));
}

/// Points on a w x h integer grid (all distinct), random colors from 0..k-1
/// with every color present.
inline ColoredInstance grid_instance(std::mt19937_64& rng, std::size_t w, std::size_t h, std::size_t k) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = 0; j < h; ++j) pts.push_back({static_cast<double>(i), static_cast<double>(j)});
  }
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<int> colors(pts.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    colors[i] = i < k ? static_cast<int>(i) : static_cast<int>(rng() % k);
  }
  std::shuffle(colors.begin(), colors.end(), rng);
  return ColoredInstance(std::move(pts), std::move(colors));
}

/// n collinear points on a random line, integer steps.
inline ColoredInstance collinear_instance(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<Point> pts;
  const double dx = 1 + static_cast<double>(rng() % 3), dy = static_cast<double>(rng() % 3);
  for (std::size_t i = 0; i < n; ++i) pts.push_back({dx * static_cast<double>(i), dy * static_cast<double>(i)});
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<int> colors(n);
  for (std::size_t i = 0; i < n; ++i) colors[i] = i < k ? static_cast<int>(i) : static_cast<int>(rng() % k);
  std::shuffle(colors.begin(), colors.end(), rng);
  return ColoredInstance(std::move(pts), std::move(colors));
}

/// Empty string when `tree` is a spanning tree of the instance with
/// differently colored endpoints on every edge; a description otherwise.
inline std::string tree_problem(const ColoredInstance& instance, const SpanningTree& tree) {
  const std::size_t n = instance.size();
  if (tree.edges.size() != n - 1) return "edge count " + std::to_string(tree.edges.size());
  UnionFind uf(n);
  for (const TreeEdge& e : tree.edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.v) >= n || e.u >= e.v) return "bad endpoints";
    if (instance.rank(e.u) == instance.rank(e.v)) return "monochromatic edge";
    if (!uf.unite(e.u, e.v)) return "cycle";
  }
  if (uf.sets() != 1) return "disconnected";
  return {};
}

/// Every vertex has an incident edge whose length is its distance to the
/// nearest (Min) or farthest (Max) point of another color.
inline bool extremal_vertex_property(const ColoredInstance& instance, const SpanningTree& tree, Objective objective) {
  const std::size_t n = instance.size();
  std::vector<std::vector<double>> incident(n);
  for (const TreeEdge& e : tree.edges) {
    const double sq = sq_dist(instance.point(e.u), instance.point(e.v));
    incident[static_cast<std::size_t>(e.u)].push_back(sq);
    incident[static_cast<std::size_t>(e.v)].push_back(sq);
  }
  for (std::size_t p = 0; p < n; ++p) {
    std::optional<double> best;
    for (std::size_t q = 0; q < n; ++q) {
      if (instance.ranks()[q] == instance.ranks()[p]) continue;
      const double d = sq_dist(instance.points()[p], instance.points()[q]);
      if (!best || (objective == Objective::Min ? d < *best : d > *best)) best = d;
    }
    if (std::find(incident[p].begin(), incident[p].end(), *best) == incident[p].end()) return false;
  }
  return true;
}

/// Component labels of every stage of a Borůvka run (after step 1 seeds for
/// the structural path). Driven by the brute solver, so the partitions
/// satisfy the nearest/farthest precondition.
inline std::vector<std::vector<Index>> staged_partitions(const ColoredInstance& instance, Objective objective) {
  std::vector<std::vector<Index>> out;
  const StageSolver brute = [&](const StageView& view) {
    out.emplace_back(view.labels.begin(), view.labels.end());
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
  run_boruvka(instance, brute, objective, extreme_neighbor_edges(instance, objective));
  return out;
}

/// Labels of a uniformly random partition into at most `parts` classes.
inline std::vector<Index> random_labels(std::mt19937_64& rng, std::size_t n, std::size_t parts) {
  std::vector<Index> labels(n);
  for (auto& l : labels) l = static_cast<Index>(rng() % parts);
  return labels;
}

/// Every edge has an endpoint that is a hull vertex of its own color class.
inline bool hull_property(const ColoredInstance& instance, const SpanningTree& tree) {
  std::vector<bool> on_hull(instance.size(), false);
  for (int c = 0; c < static_cast<int>(instance.num_colors()); ++c) {
    const auto members = instance.members(c);
    for (Index h : convex_hull(instance.points(), members)) on_hull[static_cast<std::size_t>(h)] = true;
  }
  return std::all_of(tree.edges.begin(), tree.edges.end(), [&](const TreeEdge& e) {
    return on_hull[static_cast<std::size_t>(e.u)] || on_hull[static_cast<std::size_t>(e.v)];
  });
}

}  // namespace testing
