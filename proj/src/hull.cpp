#include <algorithm>
#include <numeric>

#include "bst/triangulation.hpp"

namespace bst {

std::vector<Index> convex_hull(std::span<const Point> points) {
  const std::size_t m = points.size();
  std::vector<Index> order(m);
  std::iota(order.begin(), order.end(), Index{0});
  auto at = [&](Index i) -> const Point& { return points[static_cast<std::size_t>(i)]; };
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return lex_less(at(a), at(b)); });
  order.erase(std::unique(order.begin(), order.end(), [&](Index a, Index b) { return at(a) == at(b); }),
              order.end());
  if (order.size() <= 2) return order;

  // Andrew's monotone chain; collinear vertices are dropped.
  std::vector<Index> hull(2 * order.size());
  std::size_t k = 0;
  for (Index i : order) {
    while (k >= 2 && orient2d(at(hull[k - 2]), at(hull[k - 1]), at(i)) <= 0) --k;
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (k >= lower && orient2d(at(hull[k - 2]), at(hull[k - 1]), at(*it)) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Index> convex_hull(std::span<const Point> points, std::span<const Index> subset) {
  std::vector<Point> sub;
  sub.reserve(subset.size());
  for (Index i : subset) sub.push_back(points[static_cast<std::size_t>(i)]);
  std::vector<Index> hull = convex_hull(sub);
  for (Index& h : hull) h = subset[static_cast<std::size_t>(h)];
  return hull;
}

}  // namespace bst
