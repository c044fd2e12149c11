#pragma once

#include <cmath>
#include <optional>

namespace mink {

// 1D searches used throughout: golden-section for convex minima, plain
// bisection for sign changes.  All of them are deterministic; callers pick
// the tolerances (parameter space, not value space).

struct MinResult {
  double t = 0.0;
  double value = 0.0;
};

// minimum of a convex f over [lo, hi]
template <class F>
MinResult golden_min(F&& f, double lo, double hi, double tol, int max_iter = 200) {
  constexpr double gr = 0.6180339887498949;  // (sqrt(5)-1)/2
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (fc <= fd) {
      b = d; d = c; fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? MinResult{c, fc} : MinResult{d, fd};
}

// root of a continuous f on [lo, hi] given f(lo), f(hi) of opposite sign;
// returns the midpoint of the final bracket
template <class F>
double bisect_root(F&& f, double lo, double hi, double flo, double fhi,
                   double tol, int max_iter = 200) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid; flo = fm;
    } else {
      hi = mid; fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

// smallest root of f on [lo, hi]: scan n+1 grid points left to right, take the
// first value within zero_tol of zero or the first sign change (bisected to
// t_tol).  nullopt when the scan sees neither.
template <class F>
std::optional<double> first_root(F&& f, double lo, double hi, int n,
                                 double zero_tol, double t_tol) {
  double prev_t = lo;
  double prev_f = f(lo);
  if (std::abs(prev_f) <= zero_tol) return lo;
  for (int i = 1; i <= n; ++i) {
    double t = lo + (hi - lo) * (double(i) / n);
    double ft = f(t);
    if (std::abs(ft) <= zero_tol) return t;
    if ((ft < 0.0) != (prev_f < 0.0))
      return bisect_root(f, prev_t, t, prev_f, ft, t_tol);
    prev_t = t;
    prev_f = ft;
  }
  return std::nullopt;
}

// boundary of a monotone predicate: pred is false at f_side, true at t_side
// (either order); returns a point within tol of the switch
template <class P>
double predicate_boundary(P&& pred, double f_side, double t_side, double tol,
                          int max_iter = 200) {
  for (int i = 0; i < max_iter && std::abs(t_side - f_side) > tol; ++i) {
    double mid = 0.5 * (f_side + t_side);
    if (pred(mid)) t_side = mid; else f_side = mid;
  }
  return t_side;
}

}  // namespace mink
