#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "bst/error.hpp"
#include "bst/triangulation.hpp"

namespace bst {
namespace {

using Tri = std::array<Index, 3>;  // counterclockwise, hull positions

std::pair<Index, Index> key(Index a, Index b) { return {std::min(a, b), std::max(a, b)}; }

Index opposite(const Tri& t, Index a, Index b) {
  for (Index v : t) {
    if (v != a && v != b) return v;
  }
  return kNoIndex;
}

// Farthest-point Delaunay triangulation of a convex polygon (vertices given in
// counterclockwise order): fan triangulation followed by Lawson flips until
// every triangle's circumcircle encloses the whole polygon.
std::vector<std::pair<Index, Index>> farthest_delaunay_edges(std::span<const Point> poly) {
  const auto h = static_cast<Index>(poly.size());
  std::vector<std::pair<Index, Index>> edges;
  if (h < 2) return edges;
  if (h == 2) return {{0, 1}};

  std::vector<Tri> tris;
  std::map<std::pair<Index, Index>, std::array<Index, 2>> owners;
  auto attach = [&](Index a, Index b, Index t) {
    auto [it, fresh] = owners.try_emplace(key(a, b), std::array<Index, 2>{t, kNoIndex});
    if (!fresh) it->second[1] = t;
  };
  for (Index i = 1; i + 1 < h; ++i) {
    const auto t = static_cast<Index>(tris.size());
    tris.push_back({0, i, i + 1});
    attach(0, i, t);
    attach(i, i + 1, t);
    attach(i + 1, 0, t);
  }

  auto at = [&](Index v) -> const Point& { return poly[static_cast<std::size_t>(v)]; };
  std::vector<std::pair<Index, Index>> pending;
  for (const auto& [e, tt] : owners) {
    if (tt[1] != kNoIndex) pending.push_back(e);
  }
  auto replace_owner = [&](Index a, Index b, Index from, Index to) {
    auto& tt = owners.at(key(a, b));
    if (tt[0] == from) tt[0] = to;
    else if (tt[1] == from) tt[1] = to;
  };

  while (!pending.empty()) {
    const auto e = pending.back();
    pending.pop_back();
    auto it = owners.find(e);
    if (it == owners.end() || it->second[1] == kNoIndex) continue;
    const Index t1 = it->second[0], t2 = it->second[1];
    // Orient so that t1 = (a, b, c) and t2 = (b, a, d), both counterclockwise.
    Index a = e.first, b = e.second;
    const Tri& tri1 = tris[static_cast<std::size_t>(t1)];
    const std::size_t pos = static_cast<std::size_t>(std::find(tri1.begin(), tri1.end(), a) - tri1.begin());
    if (tri1[(pos + 1) % 3] != b) std::swap(a, b);
    const Index c = opposite(tris[static_cast<std::size_t>(t1)], a, b);
    const Index d = opposite(tris[static_cast<std::size_t>(t2)], a, b);
    if (in_circle(at(a), at(b), at(c), at(d)) >= 0) continue;

    tris[static_cast<std::size_t>(t1)] = {a, d, c};
    tris[static_cast<std::size_t>(t2)] = {d, b, c};
    owners.erase(it);
    owners[key(c, d)] = {t1, t2};
    replace_owner(a, d, t2, t1);
    replace_owner(b, c, t1, t2);
    for (auto [u, v] : {std::pair{a, d}, std::pair{d, b}, std::pair{b, c}, std::pair{c, a}}) {
      if (owners.at(key(u, v))[1] != kNoIndex) pending.push_back(key(u, v));
    }
  }

  edges.reserve(owners.size());
  for (const auto& [e, tt] : owners) edges.push_back(e);
  return edges;
}

}  // namespace

Index FarthestStructure::farthest_site(const Point& q) const {
  if (hull_.empty()) throw Error(ErrorCode::EmptyStructure, "farthest_site on an empty structure");
  std::size_t best = 0;
  for (std::size_t k = 1; k < hull_.size(); ++k) {
    const int c = compare_sq_dist(q, hull_points_[k], q, hull_points_[best]);
    if (c > 0 || (c == 0 && hull_[k] < hull_[best])) best = k;
  }
  return hull_[best];
}

FarthestStructure build_farthest(std::span<const Point> points) {
  std::vector<Index> all(points.size());
  std::iota(all.begin(), all.end(), Index{0});
  return build_farthest(points, all);
}

FarthestStructure build_farthest(std::span<const Point> points, std::span<const Index> subset) {
  if (subset.size() < 2) throw Error(ErrorCode::TooFewPoints, "farthest structure needs at least two points");
  FarthestStructure fs;
  fs.hull_ = convex_hull(points, subset);
  fs.hull_points_.reserve(fs.hull_.size());
  for (Index i : fs.hull_) fs.hull_points_.push_back(points[static_cast<std::size_t>(i)]);
  for (auto [u, v] : farthest_delaunay_edges(fs.hull_points_)) {
    fs.adjacency_.emplace_back(fs.hull_[static_cast<std::size_t>(u)], fs.hull_[static_cast<std::size_t>(v)]);
  }
  return fs;
}

}  // namespace bst
