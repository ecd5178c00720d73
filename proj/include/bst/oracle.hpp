#pragma once

// Brute-force references. They share the exact comparisons of geometry.hpp
// but none of the triangulation code.

#include <optional>
#include <span>
#include <vector>

#include "bst/instance.hpp"

namespace bst::oracle {

/// Optimal spanning tree of the complete multipartite graph: O(n^2) Prim
/// under EdgeOrder.
SpanningTree brute_multipartite_mst(const ColoredInstance& instance, Objective objective);

/// For each point, the extreme point of different color in a different
/// component (nullopt when there is none). Throws InvalidLabels.
std::vector<std::optional<Partner>> brute_extreme_unrelated(const ColoredInstance& instance,
                                                            std::span<const Index> labels, Objective objective);

/// Extreme pair (p in first, q in second) over all pairs, in EdgeOrder;
/// nullopt if either side is empty.
std::optional<Edge> brute_extreme_pair(std::span<const Point> points, std::span<const Index> first,
                                       std::span<const Index> second, Objective objective);

inline std::optional<Edge> brute_bcp(std::span<const Point> points, std::span<const Index> blue,
                                     std::span<const Index> red) {
  return brute_extreme_pair(points, blue, red, Objective::Min);
}

inline std::optional<Edge> brute_bfp(std::span<const Point> points, std::span<const Index> blue,
                                     std::span<const Index> red) {
  return brute_extreme_pair(points, blue, red, Objective::Max);
}

}  // namespace bst::oracle
