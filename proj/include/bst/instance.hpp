#pragma once

#include <algorithm>
#include <span>
#include <string_view>
#include <vector>

#include "bst/geometry.hpp"

namespace bst {

enum class Objective { Min, Max };

std::string_view to_string(Objective objective);

/// Colored planar point set: n >= 2 distinct finite points, at least two
/// distinct color labels. Labels are arbitrary nonnegative integers; `rank`
/// gives the dense renumbering 0..k-1 in increasing label order.
class ColoredInstance {
 public:
  /// Validates the invariants; throws Error (TooFewPoints, MonochromaticInput,
  /// DuplicatePoint, InvalidArgument).
  ColoredInstance(std::vector<Point> points, std::vector<int> colors);

  std::size_t size() const { return points_.size(); }
  std::size_t num_colors() const { return num_colors_; }

  std::span<const Point> points() const { return points_; }
  const Point& point(Index i) const { return points_[static_cast<std::size_t>(i)]; }

  std::span<const int> colors() const { return colors_; }
  int color(Index i) const { return colors_[static_cast<std::size_t>(i)]; }

  std::span<const int> ranks() const { return ranks_; }
  int rank(Index i) const { return ranks_[static_cast<std::size_t>(i)]; }

  /// Point indices whose dense color is `rank`.
  std::vector<Index> members(int rank) const;

 private:
  std::vector<Point> points_;
  std::vector<int> colors_;
  std::vector<int> ranks_;
  std::size_t num_colors_ = 0;
};

/// Candidate edge between two point indices.
struct Edge {
  Index u = kNoIndex;
  Index v = kNoIndex;
  double sq_length = 0.0;
};

/// Strict total order on edges: squared length (ascending for Min,
/// descending for Max), then smaller endpoint, then larger endpoint.
/// `better(a, b)` is true when a precedes b.
class EdgeOrder {
 public:
  EdgeOrder(std::span<const Point> points, Objective objective) : points_(points), objective_(objective) {}

  bool better(const Edge& a, const Edge& b) const {
    const int c = compare_sq_dist(a.sq_length, b.sq_length, at(a.u), at(a.v), at(b.u), at(b.v));
    if (c != 0) return objective_ == Objective::Min ? c < 0 : c > 0;
    const Index amin = std::min(a.u, a.v), bmin = std::min(b.u, b.v);
    if (amin != bmin) return amin < bmin;
    return std::max(a.u, a.v) < std::max(b.u, b.v);
  }

  bool operator()(const Edge& a, const Edge& b) const { return better(a, b); }

  Edge make(Index u, Index v) const { return {u, v, sq_dist(at(u), at(v))}; }

  Objective objective() const { return objective_; }

 private:
  const Point& at(Index i) const { return points_[static_cast<std::size_t>(i)]; }

  std::span<const Point> points_;
  Objective objective_;
};

/// Answer of a per-point extreme-partner query.
struct Partner {
  Index index = kNoIndex;
  double sq_length = 0.0;
};

struct TreeEdge {
  Index u = kNoIndex;  // u < v
  Index v = kNoIndex;
  double length = 0.0;
};

struct SpanningTree {
  std::vector<TreeEdge> edges;  // sorted by (u, v)
  double total_weight = 0.0;
};

/// Builds a SpanningTree from index pairs: endpoints ordered, edges sorted by
/// (u, v), total weight summed in ascending length order.
SpanningTree make_tree(std::span<const Point> points, std::span<const Edge> edges);

/// One frontier computation: sum of |T_i| over components, and |R| for the
/// color playing the red role.
struct FrontierRecord {
  std::size_t total = 0;
  std::size_t red_count = 0;
  bool farthest = false;
};

struct StageRecord {
  std::size_t components = 0;  // components entering the stage
  std::vector<FrontierRecord> frontiers;
};

/// Per-run diagnostics.
struct RunStats {
  std::size_t stages = 0;
  std::size_t initial_components = 0;
  std::vector<StageRecord> stage_log;
  std::size_t structures_built = 0;  // canonical strategy only
};

}  // namespace bst
