// Divide-and-conquer Delaunay triangulation on a quad-edge structure
// (Guibas & Stolfi), with exact predicates and index-keyed perturbation of
// the in-circle test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "bst/error.hpp"
#include "bst/triangulation.hpp"

namespace bst {
namespace {

using Edge = std::uint32_t;

class QuadEdgeBuilder {
 public:
  QuadEdgeBuilder(std::vector<Point> pts, std::vector<Index> ids)
      : pts_(std::move(pts)), ids_(std::move(ids)) {
    const std::size_t quads = 3 * pts_.size() + 8;
    next_.reserve(4 * quads);
    org_.reserve(4 * quads);
    alive_.reserve(quads);
  }

  void triangulate() {
    if (pts_.size() >= 2) divide(0, static_cast<Index>(pts_.size()));
  }

  template <class F>
  void for_each_edge(F&& f) const {
    for (std::size_t q = 0; q < alive_.size(); ++q) {
      if (!alive_[q]) continue;
      const Edge e = static_cast<Edge>(4 * q);
      f(org(e), dest(e));
    }
  }

  /// Counterclockwise neighbor lists, in sorted-vertex numbering.
  void adjacency(std::vector<std::size_t>& offsets, std::vector<Index>& adj) const {
    const std::size_t m = pts_.size();
    std::vector<Edge> out(m, kNoEdge);
    std::vector<std::size_t> degree(m, 0);
    for (std::size_t q = 0; q < alive_.size(); ++q) {
      if (!alive_[q]) continue;
      const Edge e = static_cast<Edge>(4 * q);
      out[static_cast<std::size_t>(org(e))] = e;
      out[static_cast<std::size_t>(dest(e))] = sym(e);
      ++degree[static_cast<std::size_t>(org(e))];
      ++degree[static_cast<std::size_t>(dest(e))];
    }
    offsets.assign(m + 1, 0);
    for (std::size_t v = 0; v < m; ++v) offsets[v + 1] = offsets[v] + degree[v];
    adj.resize(offsets[m]);
    for (std::size_t v = 0; v < m; ++v) {
      if (out[v] == kNoEdge) continue;
      std::size_t k = offsets[v];
      Edge e = out[v];
      do {
        adj[k++] = dest(e);
        e = onext(e);
      } while (e != out[v]);
    }
  }

 private:
  static constexpr Edge kNoEdge = ~Edge{0};

  static Edge rot(Edge e) { return (e & ~3u) | ((e + 1) & 3u); }
  static Edge inv_rot(Edge e) { return (e & ~3u) | ((e + 3) & 3u); }
  static Edge sym(Edge e) { return e ^ 2u; }

  Edge onext(Edge e) const { return next_[e]; }
  Edge oprev(Edge e) const { return rot(next_[rot(e)]); }
  Edge lnext(Edge e) const { return rot(next_[inv_rot(e)]); }
  Edge rprev(Edge e) const { return next_[sym(e)]; }
  Index org(Edge e) const { return org_[e]; }
  Index dest(Edge e) const { return org_[sym(e)]; }

  Edge make_edge(Index a, Index b) {
    const Edge e = static_cast<Edge>(next_.size());
    next_.insert(next_.end(), {e, e + 3, e + 2, e + 1});
    org_.insert(org_.end(), {a, kNoIndex, b, kNoIndex});
    alive_.push_back(true);
    return e;
  }

  void splice(Edge a, Edge b) {
    const Edge alpha = rot(next_[a]);
    const Edge beta = rot(next_[b]);
    std::swap(next_[a], next_[b]);
    std::swap(next_[alpha], next_[beta]);
  }

  Edge connect(Edge a, Edge b) {
    const Edge e = make_edge(dest(a), org(b));
    splice(e, lnext(a));
    splice(sym(e), b);
    return e;
  }

  void remove(Edge e) {
    splice(e, oprev(e));
    splice(sym(e), oprev(sym(e)));
    alive_[e >> 2] = false;
  }

  bool ccw(Index a, Index b, Index c) const { return orient2d(pt(a), pt(b), pt(c)) > 0; }
  bool right_of(Index x, Edge e) const { return ccw(x, dest(e), org(e)); }
  bool left_of(Index x, Edge e) const { return ccw(x, org(e), dest(e)); }

  bool in_circle(Index a, Index b, Index c, Index d) const {
    return in_circle_perturbed(pt(a), id(a), pt(b), id(b), pt(c), id(c), pt(d), id(d)) > 0;
  }

  const Point& pt(Index v) const { return pts_[static_cast<std::size_t>(v)]; }
  Index id(Index v) const { return ids_[static_cast<std::size_t>(v)]; }

  // Returns (ccw hull edge out of leftmost vertex, cw hull edge out of rightmost vertex).
  std::pair<Edge, Edge> divide(Index lo, Index hi) {
    const Index count = hi - lo;
    if (count == 2) {
      const Edge a = make_edge(lo, lo + 1);
      return {a, sym(a)};
    }
    if (count == 3) {
      const Edge a = make_edge(lo, lo + 1);
      const Edge b = make_edge(lo + 1, lo + 2);
      splice(sym(a), b);
      const int turn = orient2d(pt(lo), pt(lo + 1), pt(lo + 2));
      if (turn > 0) {
        connect(b, a);
        return {a, sym(b)};
      }
      if (turn < 0) {
        const Edge c = connect(b, a);
        return {sym(c), c};
      }
      return {a, sym(b)};
    }

    const Index mid = lo + count / 2;
    auto [ldo, ldi] = divide(lo, mid);
    auto [rdi, rdo] = divide(mid, hi);

    // Lower common tangent.
    for (;;) {
      if (left_of(org(rdi), ldi)) {
        ldi = lnext(ldi);
      } else if (right_of(org(ldi), rdi)) {
        rdi = rprev(rdi);
      } else {
        break;
      }
    }

    Edge basel = connect(sym(rdi), ldi);
    if (org(ldi) == org(ldo)) ldo = sym(basel);
    if (org(rdi) == org(rdo)) rdo = basel;

    auto valid = [&](Edge e) { return right_of(dest(e), basel); };
    for (;;) {
      Edge lcand = onext(sym(basel));
      if (valid(lcand)) {
        while (in_circle(dest(basel), org(basel), dest(lcand), dest(onext(lcand)))) {
          const Edge t = onext(lcand);
          remove(lcand);
          lcand = t;
        }
      }
      Edge rcand = oprev(basel);
      if (valid(rcand)) {
        while (in_circle(dest(basel), org(basel), dest(rcand), dest(oprev(rcand)))) {
          const Edge t = oprev(rcand);
          remove(rcand);
          rcand = t;
        }
      }
      const bool lvalid = valid(lcand);
      const bool rvalid = valid(rcand);
      if (!lvalid && !rvalid) break;
      if (!lvalid || (rvalid && in_circle(dest(lcand), org(lcand), org(rcand), dest(rcand)))) {
        basel = connect(rcand, sym(basel));
      } else {
        basel = connect(sym(basel), sym(lcand));
      }
    }
    return {ldo, rdo};
  }

  std::vector<Point> pts_;
  std::vector<Index> ids_;
  std::vector<Edge> next_;
  std::vector<Index> org_;
  std::vector<bool> alive_;
};

}  // namespace

std::span<const Index> DelaunayGraph::neighbors(Index s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= sites_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "site index " + std::to_string(s) + " out of range");
  }
  const auto u = static_cast<std::size_t>(s);
  return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

Index DelaunayGraph::nearest_site(const Point& q, Index hint) const {
  if (sites_.empty()) throw Error(ErrorCode::EmptyStructure, "nearest_site on an empty Delaunay graph");
  Index s = (hint >= 0 && static_cast<std::size_t>(hint) < sites_.size()) ? hint : 0;

  auto neighbors_of = [this](Index v) {
    const auto u = static_cast<std::size_t>(v);
    return std::span<const Index>(adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]);
  };

  // Greedy descent: a site with no strictly closer Delaunay neighbor owns q's Voronoi cell.
  for (;;) {
    Index best = s;
    for (Index t : neighbors_of(s)) {
      if (compare_sq_dist(q, site(t), q, site(best)) < 0) best = t;
    }
    if (best == s) break;
    s = best;
  }

  // Equidistant sites lie on an empty circle around q and are connected
  // through Delaunay edges among themselves.
  bool tie = false;
  for (Index t : neighbors_of(s)) {
    if (compare_sq_dist(q, site(t), q, site(s)) == 0) {
      tie = true;
      break;
    }
  }
  if (!tie) return s;

  std::vector<Index> stack{s};
  std::vector<Index> seen{s};
  Index best = s;
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    if (id(v) < id(best)) best = v;
    for (Index t : neighbors_of(v)) {
      if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
      if (compare_sq_dist(q, site(t), q, site(s)) != 0) continue;
      seen.push_back(t);
      stack.push_back(t);
    }
  }
  return best;
}

DelaunayGraph build_delaunay(std::span<const Point> points) {
  std::vector<Index> all(points.size());
  std::iota(all.begin(), all.end(), Index{0});
  return build_delaunay(points, all);
}

namespace {

// Sorts the subset lexicographically (rejecting duplicates) and triangulates
// it. `order[k]` is the subset position of the k-th sorted site.
QuadEdgeBuilder triangulate_subset(std::span<const Point> points, std::span<const Index> subset,
                                   std::vector<Index>& order) {
  const std::size_t m = subset.size();
  auto at = [&](Index pos) -> const Point& { return points[static_cast<std::size_t>(subset[static_cast<std::size_t>(pos)])]; };
  for (Index i : subset) {
    if (i < 0 || static_cast<std::size_t>(i) >= points.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "point index " + std::to_string(i) + " out of range");
    }
  }
  order.resize(m);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return lex_less(at(a), at(b)); });
  for (std::size_t k = 1; k < m; ++k) {
    if (at(order[k - 1]) == at(order[k])) {
      throw Error(ErrorCode::DuplicatePoint, "duplicate point: indices " +
                                                 std::to_string(subset[static_cast<std::size_t>(order[k - 1])]) +
                                                 " and " + std::to_string(subset[static_cast<std::size_t>(order[k])]));
    }
  }
  std::vector<Point> sorted_pts(m);
  std::vector<Index> sorted_ids(m);
  for (std::size_t k = 0; k < m; ++k) {
    sorted_pts[k] = at(order[k]);
    sorted_ids[k] = subset[static_cast<std::size_t>(order[k])];
  }
  QuadEdgeBuilder builder(std::move(sorted_pts), std::move(sorted_ids));
  builder.triangulate();
  return builder;
}

}  // namespace

DelaunayGraph build_delaunay(std::span<const Point> points, std::span<const Index> subset) {
  DelaunayGraph g;
  const std::size_t m = subset.size();
  std::vector<Index> order;
  const QuadEdgeBuilder builder = triangulate_subset(points, subset, order);
  g.ids_.assign(subset.begin(), subset.end());
  g.sites_.reserve(m);
  for (Index i : subset) g.sites_.push_back(points[static_cast<std::size_t>(i)]);

  std::vector<std::size_t> offsets;
  std::vector<Index> adj;
  builder.adjacency(offsets, adj);

  // Renumber from sorted order back to local indices.
  g.offsets_.assign(m + 1, 0);
  for (std::size_t k = 0; k < m; ++k) {
    g.offsets_[static_cast<std::size_t>(order[k]) + 1] = offsets[k + 1] - offsets[k];
  }
  for (std::size_t v = 0; v < m; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(adj.size());
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t dst = g.offsets_[static_cast<std::size_t>(order[k])];
    for (std::size_t j = offsets[k]; j < offsets[k + 1]; ++j) {
      g.adjacency_[dst++] = order[static_cast<std::size_t>(adj[j])];
    }
  }

  g.hull_ = convex_hull(g.sites_);
  return g;
}

std::vector<std::pair<Index, Index>> delaunay_edges(std::span<const Point> points, std::span<const Index> subset) {
  std::vector<Index> order;
  const QuadEdgeBuilder builder = triangulate_subset(points, subset, order);
  std::vector<std::pair<Index, Index>> edges;
  builder.for_each_edge([&](Index a, Index b) {
    const Index s = order[static_cast<std::size_t>(a)], t = order[static_cast<std::size_t>(b)];
    edges.emplace_back(std::min(s, t), std::max(s, t));
  });
  return edges;
}

}  // namespace bst
