#include "minkgeom/ortho_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "minkgeom/errors.hpp"
#include "minkgeom/minimize.hpp"

namespace mink {

namespace {

double comp_max(Point v) { return std::max(std::abs(v.x), std::abs(v.y)); }

void require_distinct(Point a, Point b, Point c) {
  const double scale = std::max({1.0, euclid(a), euclid(b), euclid(c)});
  if (euclid(a - b) <= 1e-12 * scale || euclid(a - c) <= 1e-12 * scale ||
      euclid(b - c) <= 1e-12 * scale) {
    throw std::invalid_argument("triangle vertices must be pairwise distinct");
  }
}

// t such that p0 + t (b - a) is equidistant from a and b.  The difference
// ||p - a|| - ||p - b|| along that direction is f(t) - f(t - 1) for a convex
// f, hence nondecreasing, so a sign bracket plus bisection always lands.
double equidistant_param(const Plane& plane, Point p0, Point a, Point b) {
  const Point d = b - a;
  auto psi = [&](double t) {
    const Point p = p0 + t * d;
    return plane.norm(p - a) - plane.norm(p - b);
  };
  double L = 2.0 * plane.norm(p0 - a) / plane.norm(d) + 2.0;
  double lo = -L, hi = L;
  double flo = psi(lo), fhi = psi(hi);
  for (int i = 0; i < 60 && flo > 0.0; ++i) {
    lo *= 2.0;
    flo = psi(lo);
  }
  for (int i = 0; i < 60 && fhi < 0.0; ++i) {
    hi *= 2.0;
    fhi = psi(hi);
  }
  if (flo > 0.0 || fhi < 0.0) throw construction_error("equidistant bracket failed");
  return bisect_root(psi, lo, hi, flo, fhi, 1e-13 * std::max(1.0, hi - lo));
}

}  // namespace

OrthoScenario build_system(Point x1, Point x2, Point x3, Point p4) {
  require_distinct(x1, x2, x3);
  OrthoScenario s;
  s.x1 = x1;
  s.x2 = x2;
  s.x3 = x3;
  s.p4 = p4;
  s.m1 = 0.5 * (x2 + x3);
  s.m2 = 0.5 * (x1 + x3);
  s.m3 = 0.5 * (x1 + x2);
  s.p1 = point_symmetry(s.m1, p4);
  s.p2 = point_symmetry(s.m2, p4);
  s.p3 = point_symmetry(s.m3, p4);
  s.q = 0.5 * (x1 + x2 + x3 - p4);
  s.x4 = point_symmetry(s.q, p4);
  s.g = (1.0 / 3.0) * (x1 + x2 + x3);
  s.lambda = 0.0;
  return s;
}

Triangle antitriangle(const Triangle& tri, Point p4) {
  const OrthoScenario s = build_system(tri.x1, tri.x2, tri.x3, p4);
  return Triangle{s.p1, s.p2, s.p3};
}

double system_identity_residual(const OrthoScenario& s) {
  const Point x[4] = {s.x1, s.x2, s.x3, s.x4};
  const Point p[4] = {s.p1, s.p2, s.p3, s.p4};
  double r = 0.0;

  for (int i = 0; i < 4; ++i) r = std::max(r, comp_max(0.5 * (x[i] + p[i]) - s.q));
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      r = std::max(r, comp_max((x[i] - x[j]) - (p[j] - p[i])));
    }
  }
  int perm[4] = {0, 1, 2, 3};
  std::sort(perm, perm + 4);
  do {
    const int i = perm[0], j = perm[1], k = perm[2], l = perm[3];
    r = std::max(r, comp_max((x[i] - p[j]) - (p[k] - x[l])));
  } while (std::next_permutation(perm, perm + 4));

  r = std::max(r, comp_max((3.0 * s.g - 2.0 * s.p4) - s.x4));
  const Point gp = (1.0 / 3.0) * (s.p1 + s.p2 + s.p3);
  r = std::max(r, comp_max((3.0 * gp - 2.0 * s.x4) - s.p4));

  r = std::max(r, comp_max(s.m1 - 0.5 * (s.x2 + s.x3)));
  r = std::max(r, comp_max(s.m2 - 0.5 * (s.x1 + s.x3)));
  r = std::max(r, comp_max(s.m3 - 0.5 * (s.x1 + s.x2)));
  r = std::max(r, comp_max(s.g - (1.0 / 3.0) * (s.x1 + s.x2 + s.x3)));
  return r;
}

CircumcenterSet circumcenters(const Plane& plane, const Triangle& tri) {
  const double E = std::max({euclid(tri.x2 - tri.x1), euclid(tri.x3 - tri.x1),
                             euclid(tri.x3 - tri.x2)});
  const double scale = std::max(1.0, E);
  if (std::abs(cross(tri.x2 - tri.x1, tri.x3 - tri.x1)) <= 1e-12 * scale * scale) {
    throw std::invalid_argument("degenerate triangle");
  }

  const Point d12 = tri.x2 - tri.x1;
  const Point d13 = tri.x3 - tri.x1;
  const Point n = rot90(d12) / euclid(d12);
  const Point m3 = 0.5 * (tri.x1 + tri.x2);

  auto center_at = [&](double beta) {
    const Point p0 = m3 + beta * n;
    return p0 + equidistant_param(plane, p0, tri.x1, tri.x2) * d12;
  };
  auto chi = [&](double beta) {
    const Point c = center_at(beta);
    return plane.norm(c - tri.x1) - plane.norm(c - tri.x3);
  };
  auto discrepancy = [&](Point c) {
    const double r1 = plane.norm(c - tri.x1);
    const double r2 = plane.norm(c - tri.x2);
    const double r3 = plane.norm(c - tri.x3);
    return std::max({std::abs(r1 - r2), std::abs(r1 - r3), std::abs(r2 - r3)});
  };
  auto polish = [&](Point c) {
    for (int i = 0; i < 40; ++i) {
      const double t = equidistant_param(plane, c, tri.x1, tri.x2);
      c = c + t * d12;
      const double u = equidistant_param(plane, c, tri.x1, tri.x3);
      c = c + u * d13;
      if (std::abs(t) * euclid(d12) + std::abs(u) * euclid(d13) < 1e-13 * scale) break;
    }
    return c;
  };

  const double B = 32.0 * E;
  const int N = 2048;
  const double ztol = 1e-12 * scale;

  std::vector<double> betas;
  double prev_b = -B;
  double prev_f = chi(prev_b);
  for (int i = 1; i <= N; ++i) {
    const double b = -B + 2.0 * B * i / N;
    const double f = chi(b);
    if (std::abs(prev_f) <= ztol) {
      betas.push_back(prev_b);
    } else if (std::abs(f) > ztol && prev_f * f < 0.0) {
      betas.push_back(bisect_root(chi, prev_b, b, prev_f, f, 1e-10 * scale));
    }
    prev_b = b;
    prev_f = f;
  }
  if (std::abs(prev_f) <= ztol) betas.push_back(prev_b);

  std::vector<Point> found;
  for (double b : betas) {
    const Point c = polish(center_at(b));
    if (discrepancy(c) > 1e-8 * scale) continue;
    bool dup = false;
    for (const Point& o : found) {
      if (euclid(c - o) <= 1e-6 * scale) dup = true;
    }
    if (!dup) found.push_back(c);
  }

  CircumcenterSet out;
  if (found.empty()) return out;
  if (found.size() == 1) {
    out.kind = CircumcenterSet::Kind::Single;
    out.a = found.front();
    return out;
  }
  // more than one survivor: a segment when the midpoint is a center too,
  // otherwise keep the best isolated representative
  const Point a = found.front();
  const Point b = found.back();
  const Point mid = polish(0.5 * (a + b));
  if (discrepancy(mid) <= 1e-8 * scale) {
    out.kind = CircumcenterSet::Kind::Segment;
    out.a = a;
    out.b = b;
    return out;
  }
  out.kind = CircumcenterSet::Kind::Single;
  out.a = a;
  for (const Point& c : found) {
    if (discrepancy(c) < discrepancy(out.a)) out.a = c;
  }
  return out;
}

Point c_orthocenter(const Plane& plane, const Triangle& tri, Point p4) {
  const double scale = std::max({1.0, euclid(tri.x1 - p4), euclid(tri.x2 - p4)});
  const double r1 = plane.norm(p4 - tri.x1);
  const double r2 = plane.norm(p4 - tri.x2);
  const double r3 = plane.norm(p4 - tri.x3);
  const double disc = std::max({std::abs(r1 - r2), std::abs(r1 - r3), std::abs(r2 - r3)});
  if (disc > 1e-6 * scale) {
    throw std::invalid_argument("p4 is not a circumcenter of the triangle");
  }
  return build_system(tri.x1, tri.x2, tri.x3, p4).x4;
}

Line radical_axis(const Plane& plane, const Circumference& c1, const Circumference& c2) {
  if (!plane.spec().is_euclidean()) {
    throw std::invalid_argument("radical axis is Euclidean-only");
  }
  const Point d = c2.center - c1.center;
  const double dd = dot(d, d);
  const double scale = std::max({1.0, euclid(c1.center), euclid(c2.center)});
  if (std::sqrt(dd) <= 1e-12 * scale) {
    throw std::invalid_argument("concentric circles have no radical axis");
  }
  const double s = (c1.radius * c1.radius - c2.radius * c2.radius + dd) / (2.0 * dd);
  return Line{c1.center + s * d, rot90(d)};
}

}  // namespace mink
