#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bst/geometry.hpp"

namespace bst {

/// Delaunay graph over a set of sites.
///
/// Sites are addressed by a local index (their position in the list the
/// graph was built from); `id()` maps a local index back to the caller's
/// index space. Cocircular ties are resolved by a symbolic perturbation keyed
/// to those ids, so the edge set of a subset only depends on the subset.
class DelaunayGraph {
 public:
  DelaunayGraph() = default;

  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }

  const Point& site(Index s) const { return sites_[static_cast<std::size_t>(s)]; }
  Index id(Index s) const { return ids_[static_cast<std::size_t>(s)]; }
  std::span<const Point> sites() const { return sites_; }
  std::span<const Index> ids() const { return ids_; }

  /// Delaunay neighbors of `s` in counterclockwise order. Throws IndexOutOfRange.
  std::span<const Index> neighbors(Index s) const;

  /// Counterclockwise, strictly convex hull cycle (local indices).
  std::span<const Index> hull() const { return hull_; }

  std::size_t edge_count() const { return adjacency_.size() / 2; }

  /// Calls f(s, t) once per undirected edge, with s < t.
  template <class F>
  void for_each_edge(F&& f) const {
    for (std::size_t s = 0; s + 1 < offsets_.size(); ++s) {
      for (std::size_t k = offsets_[s]; k < offsets_[s + 1]; ++k) {
        if (static_cast<Index>(s) < adjacency_[k]) f(static_cast<Index>(s), adjacency_[k]);
      }
    }
  }

  /// Site nearest to q; ties go to the smallest id. The walk starts at `hint`.
  /// Throws EmptyStructure.
  Index nearest_site(const Point& q, Index hint = 0) const;

 private:
  friend DelaunayGraph build_delaunay(std::span<const Point>, std::span<const Index>);

  std::vector<Point> sites_;
  std::vector<Index> ids_;
  std::vector<std::size_t> offsets_;
  std::vector<Index> adjacency_;
  std::vector<Index> hull_;
};

/// Delaunay graph of `points` (ids are positions). Throws DuplicatePoint.
DelaunayGraph build_delaunay(std::span<const Point> points);

/// Delaunay graph of the subset `points[subset[i]]`; site i has id subset[i].
DelaunayGraph build_delaunay(std::span<const Point> points, std::span<const Index> subset);

/// Undirected edges of build_delaunay(points, subset) as pairs (s, t), s < t,
/// of positions into `subset`, without building neighbor lists.
std::vector<std::pair<Index, Index>> delaunay_edges(std::span<const Point> points, std::span<const Index> subset);

/// Counterclockwise strictly convex hull, as positions into `points`, starting
/// from the lexicographically smallest vertex. All-collinear input yields the
/// two extremes; a single point yields itself.
std::vector<Index> convex_hull(std::span<const Point> points);

/// Hull of `points[subset[i]]`, reported as values taken from `subset`.
std::vector<Index> convex_hull(std::span<const Point> points, std::span<const Index> subset);

/// Farthest-point Voronoi structure of a planar point set, kept as its hull
/// plus the pairs of hull sites whose farthest cells share an edge (the edges
/// of the farthest-point Delaunay triangulation). Site indices live in the
/// caller's index space.
class FarthestStructure {
 public:
  FarthestStructure() = default;

  std::span<const Index> hull() const { return hull_; }
  std::span<const std::pair<Index, Index>> adjacency() const { return adjacency_; }
  bool empty() const { return hull_.empty(); }

  /// Hull site maximizing distance to q; ties go to the smallest index.
  /// Throws EmptyStructure.
  Index farthest_site(const Point& q) const;

 private:
  friend FarthestStructure build_farthest(std::span<const Point>, std::span<const Index>);

  std::vector<Index> hull_;
  std::vector<Point> hull_points_;
  std::vector<std::pair<Index, Index>> adjacency_;
};

/// Throws TooFewPoints for fewer than two points.
FarthestStructure build_farthest(std::span<const Point> points);
FarthestStructure build_farthest(std::span<const Point> points, std::span<const Index> subset);

}  // namespace bst
