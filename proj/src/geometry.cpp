#include "bst/geometry.hpp"

#include <algorithm>
#include <array>

#include "expansion.hpp"

namespace bst {
namespace detail {

namespace {

// (ux * vy - uy * vx) for expansion coordinates.
Expansion cross(const Expansion& ux, const Expansion& uy, const Expansion& vx, const Expansion& vy) {
  return sum(product(ux, vy), negate(product(uy, vx)));
}

Expansion square_norm(const Expansion& dx, const Expansion& dy) {
  return sum(product(dx, dx), product(dy, dy));
}

}  // namespace

int orient2d_exact(const Point& a, const Point& b, const Point& c) {
  return sign(cross(difference(a.x, c.x), difference(a.y, c.y), difference(b.x, c.x),
                    difference(b.y, c.y)));
}

int in_circle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Expansion adx = difference(a.x, d.x), ady = difference(a.y, d.y);
  const Expansion bdx = difference(b.x, d.x), bdy = difference(b.y, d.y);
  const Expansion cdx = difference(c.x, d.x), cdy = difference(c.y, d.y);
  const Expansion det = sum(sum(product(square_norm(adx, ady), cross(bdx, bdy, cdx, cdy)),
                                product(square_norm(bdx, bdy), cross(cdx, cdy, adx, ady))),
                            product(square_norm(cdx, cdy), cross(adx, ady, bdx, bdy)));
  return sign(det);
}

int compare_sq_dist_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Expansion lhs = square_norm(difference(a.x, b.x), difference(a.y, b.y));
  const Expansion rhs = square_norm(difference(c.x, d.x), difference(c.y, d.y));
  return sign(sum(lhs, negate(rhs)));
}

int in_circle_tie(const Point& a, Index ia, const Point& b, Index ib, const Point& c, Index ic, const Point& d,
                  Index id) {
  // Raising the lifted height of one point by delta changes the determinant by
  // delta times the signed orientation of the other three.
  struct Term {
    Index index;
    int which;
  };
  std::array<Term, 4> terms{{{ia, 0}, {ib, 1}, {ic, 2}, {id, 3}}};
  std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return l.index < r.index; });
  for (const Term& t : terms) {
    int coef = 0;
    switch (t.which) {
      case 0: coef = orient2d(b, c, d); break;
      case 1: coef = -orient2d(a, c, d); break;
      case 2: coef = orient2d(a, b, d); break;
      default: coef = -orient2d(a, b, c); break;
    }
    if (coef != 0) return coef;
  }
  return 0;
}

}  // namespace detail
}  // namespace bst
