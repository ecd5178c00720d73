#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace bst {

using Index = std::int32_t;
inline constexpr Index kNoIndex = -1;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Lexicographic (x, then y) order.
inline bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline double sq_dist(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

namespace detail {
int orient2d_exact(const Point& a, const Point& b, const Point& c);
int in_circle_exact(const Point& a, const Point& b, const Point& c, const Point& d);
int compare_sq_dist_exact(const Point& a, const Point& b, const Point& c, const Point& d);

inline constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;  // 2^-53
inline constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
inline constexpr double kInCircleBound = (10.0 + 96.0 * kEps) * kEps;
inline constexpr double kSqDistBound = 8.0 * kEps;

inline int sign(double v) { return (v > 0.0) - (v < 0.0); }
}  // namespace detail

/// Sign of the signed area of (a, b, c): +1 counterclockwise, -1 clockwise, 0 collinear.
/// Exact for all finite inputs.
inline int orient2d(const Point& a, const Point& b, const Point& c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  double detsum;
  if (left > 0.0) {
    if (right <= 0.0) return detail::sign(det);
    detsum = left + right;
  } else if (left < 0.0) {
    if (right >= 0.0) return detail::sign(det);
    detsum = -left - right;
  } else {
    return detail::sign(det);
  }
  if (std::abs(det) >= detail::kOrientBound * detsum) return detail::sign(det);
  return detail::orient2d_exact(a, b, c);
}

/// +1 if d lies strictly inside the circle through counterclockwise (a, b, c),
/// -1 if strictly outside, 0 if cocircular. Exact.
namespace detail {
// Sign of the perturbation terms for four distinct, exactly cocircular points.
int in_circle_tie(const Point& a, Index ia, const Point& b, Index ib, const Point& c, Index ic, const Point& d,
                  Index id);
}  // namespace detail

inline int in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  if (std::abs(det) > detail::kInCircleBound * permanent) return detail::sign(det);
  return detail::in_circle_exact(a, b, c, d);
}

/// in_circle under a symbolic perturbation that lifts every point by an
/// infinitesimal amount, largest for the smallest index. Cocircular ties are
/// resolved so that the lowest-index point counts as outside. Returns 0 only
/// when some index repeats (the same site appears twice).
inline int in_circle_perturbed(const Point& a, Index ia, const Point& b, Index ib, const Point& c, Index ic,
                               const Point& d, Index id) {
  if (ia == ib || ia == ic || ia == id || ib == ic || ib == id || ic == id) return 0;
  if (const int s = in_circle(a, b, c, d); s != 0) return s;
  return detail::in_circle_tie(a, ia, b, ib, c, ic, d, id);
}

/// Sign of |ab|^2 - |cd|^2, decided exactly.
inline int compare_sq_dist(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double lhs = sq_dist(a, b);
  const double rhs = sq_dist(c, d);
  if (std::abs(lhs - rhs) > detail::kSqDistBound * (lhs + rhs)) return detail::sign(lhs - rhs);
  return detail::compare_sq_dist_exact(a, b, c, d);
}

/// Same as compare_sq_dist when the caller already holds the rounded squared lengths.
inline int compare_sq_dist(double ab, double cd, const Point& a, const Point& b, const Point& c,
                           const Point& d) {
  if (std::abs(ab - cd) > detail::kSqDistBound * (ab + cd)) return detail::sign(ab - cd);
  return detail::compare_sq_dist_exact(a, b, c, d);
}

}  // namespace bst
