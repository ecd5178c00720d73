#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "bst/geometry.hpp"

namespace bst::detail {

inline std::uint64_t hilbert_key(std::uint32_t x, std::uint32_t y, int order) {
  std::uint64_t d = 0;
  for (std::uint32_t s = std::uint32_t{1} << (order - 1); s > 0; s >>= 1) {
    const std::uint32_t rx = (x & s) ? 1 : 0;
    const std::uint32_t ry = (y & s) ? 1 : 0;
    d += std::uint64_t{s} * s * ((3 * rx) ^ ry);
    if (ry == 0) {
      if (rx == 1) {
        x = s - 1 - x;
        y = s - 1 - y;
      }
      std::swap(x, y);
    }
  }
  return d;
}

/// Indices of `subset` (or of all points when empty) sorted along a Hilbert
/// curve over their bounding box, so consecutive queries are close in space.
inline std::vector<Index> spatial_order(std::span<const Point> points, std::span<const Index> subset = {}) {
  std::vector<Index> idx;
  if (subset.empty()) {
    idx.resize(points.size());
    std::iota(idx.begin(), idx.end(), Index{0});
  } else {
    idx.assign(subset.begin(), subset.end());
  }
  if (idx.size() < 3) return idx;
  double xmin = points[static_cast<std::size_t>(idx[0])].x, xmax = xmin;
  double ymin = points[static_cast<std::size_t>(idx[0])].y, ymax = ymin;
  for (Index i : idx) {
    const Point& p = points[static_cast<std::size_t>(i)];
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  constexpr int kOrder = 16;
  constexpr double kCells = 65535.0;
  const double sx = xmax > xmin ? kCells / (xmax - xmin) : 0.0;
  const double sy = ymax > ymin ? kCells / (ymax - ymin) : 0.0;
  std::vector<std::pair<std::uint64_t, Index>> keyed;
  keyed.reserve(idx.size());
  for (Index i : idx) {
    const Point& p = points[static_cast<std::size_t>(i)];
    const auto cx = static_cast<std::uint32_t>((p.x - xmin) * sx);
    const auto cy = static_cast<std::uint32_t>((p.y - ymin) * sy);
    keyed.emplace_back(hilbert_key(cx, cy, kOrder), i);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 0; k < keyed.size(); ++k) idx[k] = keyed[k].second;
  return idx;
}

}  // namespace bst::detail
