#pragma once

// Structural stage solvers: all bichromatic closest pairs through Delaunay
// frontier sets, and all bichromatic farthest pairs through farthest-point
// frontier sets and convex hulls.

#include <optional>
#include <span>
#include <vector>

#include "bst/instance.hpp"
#include "bst/triangulation.hpp"

namespace bst {

/// T_i per component: points outside component i adjacent (in the
/// underlying structure) to a point of component i.
struct FrontierSets {
  std::vector<std::vector<Index>> sets;

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& s : sets) t += s.size();
    return t;
  }
};

/// Frontier sets over the Delaunay graph of the red points. `labels[s]` is the
/// component of site s (local index); the sets hold site ids. One pass over
/// the edges. Throws LabelMismatch if labels.size() != dt_red.size().
FrontierSets frontier_nearest(const DelaunayGraph& dt_red, std::span<const Index> labels);

/// Frontier sets over the farthest-point structure of the red points.
/// `labels` is indexed by the structure's site ids. Throws LabelMismatch when
/// a hull site has no label.
FrontierSets frontier_farthest(const FarthestStructure& fs_red, std::span<const Index> labels);

/// Per-component answers of one color role, with the frontier size used.
struct RoleAnswers {
  std::vector<std::optional<Edge>> pairs;  // (blue endpoint, red endpoint)
  std::size_t frontier_total = 0;
};

/// For every component i: the closest pair between its blue points and the
/// red points outside it, read off the Delaunay graph of B_i together with
/// T_i. Absent when B_i or R \ R_i is empty. Requires every point to share
/// its component with its nearest point of opposite color.
///
/// `labels` are dense component labels for all points; `dt_red` is built over
/// the red points (site ids are point indices); blue points are those of
/// dense color `blue_rank`.
RoleAnswers all_blue_bcp(const ColoredInstance& instance, std::span<const Index> labels, std::size_t components,
                         const DelaunayGraph& dt_red, int blue_rank);

/// Farthest-pair counterpart: T_i from the farthest structure of the red
/// points, answer = max_dist_hulls(CH(B_i), CH(T_i)). `red` lists the red
/// point indices; `fs_red` may be empty when there is a single red point.
RoleAnswers all_blue_bfp(const ColoredInstance& instance, std::span<const Index> labels, std::size_t components,
                         const FarthestStructure& fs_red, std::span<const Index> red, int blue_rank);

/// For every component i: the farthest pair between the blue hull vertices
/// in B_i and all red points outside component i. Covers the outgoing edges
/// whose inner endpoint lies on CH(B) and whose outer endpoint is interior to
/// CH(R), which the frontier answer above cannot see. `hull_blue` is CH(B);
/// `red` lists every red point. One scan of `red` per hull vertex.
RoleAnswers hull_vertex_bfp(const ColoredInstance& instance, std::span<const Index> labels, std::size_t components,
                            std::span<const Index> hull_blue, std::span<const Index> red);

struct HullPair {
  Index p = kNoIndex;
  Index q = kNoIndex;
  double sq_length = 0.0;
};

/// Farthest pair (p from hull_p, q from hull_q) by a scan over vertex pairs;
/// ties follow EdgeOrder. Indices refer to `points`. Throws EmptyHull.
HullPair max_dist_hulls(std::span<const Point> points, std::span<const Index> hull_p,
                        std::span<const Index> hull_q);

}  // namespace bst
