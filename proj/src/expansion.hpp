#pragma once

// Nonoverlapping floating-point expansions (sums of doubles ordered by
// increasing magnitude) with exact sum and product. Only used on the slow
// path of the geometric predicates.

#include <cstddef>
#include <vector>

namespace bst::detail {

using Expansion = std::vector<double>;

inline void fast_two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bv = x - a;
  y = b - bv;
}

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bv = x - a;
  const double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  const double bv = a - x;
  const double av = x + bv;
  y = (a - av) + (bv - b);
}

inline void split(double a, double& hi, double& lo) {
  constexpr double kSplitter = 134217729.0;  // 2^27 + 1
  const double c = kSplitter * a;
  const double big = c - a;
  hi = c - big;
  lo = a - hi;
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  double ahi, alo, bhi, blo;
  split(a, ahi, alo);
  split(b, bhi, blo);
  const double err1 = x - ahi * bhi;
  const double err2 = err1 - alo * bhi;
  const double err3 = err2 - ahi * blo;
  y = alo * blo - err3;
}

/// a - b as an exact expansion.
inline Expansion difference(double a, double b) {
  double x, y;
  two_diff(a, b, x, y);
  Expansion e;
  if (y != 0.0) e.push_back(y);
  if (x != 0.0) e.push_back(x);
  return e;
}

/// Shewchuk's fast_expansion_sum_zeroelim.
inline Expansion sum(const Expansion& e, const Expansion& f) {
  if (e.empty()) return f;
  if (f.empty()) return e;
  Expansion h;
  h.reserve(e.size() + f.size());
  std::size_t ei = 0, fi = 0;
  double enow = e[0], fnow = f[0];
  double q, qnew, hh;
  auto next_e = [&] { ++ei; if (ei < e.size()) enow = e[ei]; };
  auto next_f = [&] { ++fi; if (fi < f.size()) fnow = f[fi]; };
  if ((fnow > enow) == (fnow > -enow)) {
    q = enow;
    next_e();
  } else {
    q = fnow;
    next_f();
  }
  if (ei < e.size() && fi < f.size()) {
    if ((fnow > enow) == (fnow > -enow)) {
      fast_two_sum(enow, q, qnew, hh);
      next_e();
    } else {
      fast_two_sum(fnow, q, qnew, hh);
      next_f();
    }
    q = qnew;
    if (hh != 0.0) h.push_back(hh);
    while (ei < e.size() && fi < f.size()) {
      if ((fnow > enow) == (fnow > -enow)) {
        two_sum(q, enow, qnew, hh);
        next_e();
      } else {
        two_sum(q, fnow, qnew, hh);
        next_f();
      }
      q = qnew;
      if (hh != 0.0) h.push_back(hh);
    }
  }
  while (ei < e.size()) {
    two_sum(q, enow, qnew, hh);
    next_e();
    q = qnew;
    if (hh != 0.0) h.push_back(hh);
  }
  while (fi < f.size()) {
    two_sum(q, fnow, qnew, hh);
    next_f();
    q = qnew;
    if (hh != 0.0) h.push_back(hh);
  }
  if (q != 0.0) h.push_back(q);
  return h;
}

/// Shewchuk's scale_expansion_zeroelim.
inline Expansion scale(const Expansion& e, double b) {
  Expansion h;
  if (e.empty() || b == 0.0) return h;
  h.reserve(2 * e.size());
  double q, hh, p1, p0, s;
  two_product(e[0], b, q, hh);
  if (hh != 0.0) h.push_back(hh);
  for (std::size_t i = 1; i < e.size(); ++i) {
    two_product(e[i], b, p1, p0);
    two_sum(q, p0, s, hh);
    if (hh != 0.0) h.push_back(hh);
    fast_two_sum(p1, s, q, hh);
    if (hh != 0.0) h.push_back(hh);
  }
  if (q != 0.0) h.push_back(q);
  return h;
}

inline Expansion product(const Expansion& e, const Expansion& f) {
  Expansion acc;
  for (double term : f) acc = sum(acc, scale(e, term));
  return acc;
}

inline Expansion negate(Expansion e) {
  for (double& t : e) t = -t;
  return e;
}

inline int sign(const Expansion& e) {
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (*it > 0.0) return 1;
    if (*it < 0.0) return -1;
  }
  return 0;
}

}  // namespace bst::detail
