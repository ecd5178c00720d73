#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bst/boruvka.hpp"
#include "bst/instance.hpp"

namespace bst {

/// How the per-stage extreme edges are found.
///   Structural: Delaunay / farthest-point frontier sets (two colors).
///   Canonical:  canonical-set nearest/farthest structures.
///   Brute:      quadratic Prim, no engine.
enum class Strategy { Structural, Canonical, Brute };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view name);

/// Minimum spanning tree of the complete bipartite graph K(R, B). The
/// instance must have exactly two colors (InvalidArgument otherwise).
SpanningTree min_bst(const ColoredInstance& instance, Strategy strategy = Strategy::Structural,
                     RunStats* stats = nullptr);

/// Maximum spanning tree of K(R, B).
SpanningTree max_bst(const ColoredInstance& instance, Strategy strategy = Strategy::Structural,
                     RunStats* stats = nullptr);

/// Two-color tree for either objective.
SpanningTree bst_tree(const ColoredInstance& instance, Objective objective, Strategy strategy = Strategy::Structural,
                      RunStats* stats = nullptr);

/// Union of the per-color-bit two-color trees, restricted to edges whose
/// endpoints have different colors. Edges are deduplicated, u < v.
struct UnionGraph {
  std::vector<Edge> edges;
};

UnionGraph build_union_graph(const ColoredInstance& instance, Objective objective,
                             Strategy strategy = Strategy::Structural, RunStats* stats = nullptr);

/// Optimal spanning tree of the complete multipartite graph, for any k >= 2:
/// Kruskal over the union graph under EdgeOrder.
SpanningTree min_k_st(const ColoredInstance& instance, Strategy strategy = Strategy::Structural,
                      RunStats* stats = nullptr);
SpanningTree max_k_st(const ColoredInstance& instance, Strategy strategy = Strategy::Structural,
                      RunStats* stats = nullptr);

/// Dispatches on the number of colors: two colors go straight to the
/// two-color tree, more go through the union graph. Brute ignores k.
SpanningTree spanning_tree(const ColoredInstance& instance, Objective objective,
                           Strategy strategy = Strategy::Structural, RunStats* stats = nullptr);

/// Stage solver for two-color instances built on all_blue_bcp / all_blue_bfp
/// with both color roles. Records frontier sizes in the stage record.
StageSolver structural_stage_solver(const ColoredInstance& instance, Objective objective);

/// Step 1 of the structural algorithm: every point joined to its extreme
/// point of opposite color, mutual pairs merged.
std::vector<Edge> extreme_neighbor_edges(const ColoredInstance& instance, Objective objective);

}  // namespace bst
