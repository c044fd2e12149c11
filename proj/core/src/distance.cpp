#include "minkgeom/distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minkgeom/minimize.hpp"

namespace mink {

double dist_point_line(const Plane& plane, Point x, const Line& line) {
  if (euclid(line.dir) == 0.0) throw std::invalid_argument("line direction must be nonzero");
  const Functional f = annihilator(line.dir);
  return std::abs(f(x - line.base)) / plane.dual_norm(f);
}

double dist_point_line_direct(const Plane& plane, Point x, const Line& line) {
  const double nd = plane.norm(line.dir);
  if (nd == 0.0) throw std::invalid_argument("line direction must be nonzero");
  const Point w = x - line.base;
  const double nw = plane.norm(w);
  if (nw == 0.0) return 0.0;
  // any t with ||w - t dir|| <= ||w|| satisfies |t| <= 2 ||w|| / ||dir||
  const double T = 2.0 * nw / nd;
  auto g = [&](double t) { return plane.norm(w - t * line.dir); };
  const MinResult m = golden_min(g, -T, T, 1e-12 * std::max(1.0, T));
  return std::min(m.value, nw);
}

double dist_point_ray(const Plane& plane, Point x, const Ray& ray) {
  const double nd = plane.norm(ray.dir);
  if (nd == 0.0) throw std::invalid_argument("ray direction must be nonzero");
  const Point w = x - ray.apex;
  const double nw = plane.norm(w);
  if (nw == 0.0) return 0.0;
  const double T = 2.0 * nw / nd;
  auto g = [&](double t) { return plane.norm(w - t * ray.dir); };
  const MinResult m = golden_min(g, 0.0, T, 1e-12 * std::max(1.0, T));
  return std::min(m.value, nw);
}

double dist_point_segment(const Plane& plane, Point x, const Segment& seg) {
  const Point d = seg.b - seg.a;
  const double na = plane.norm(x - seg.a);
  const double nb = plane.norm(x - seg.b);
  if (euclid(d) == 0.0) return na;
  auto g = [&](double t) { return plane.norm(x - (seg.a + t * d)); };
  const MinResult m = golden_min(g, 0.0, 1.0, 1e-12);
  return std::min({m.value, na, nb});
}

std::pair<Line, Line> support_lines_at(const Plane& plane, const Circumference& circ, Point e) {
  const Point u = e - circ.center;
  const double tol = scaled_tol(1e-9, circ.radius);
  if (std::abs(plane.norm(u) - circ.radius) > tol) {
    throw std::invalid_argument("not a boundary point");
  }
  const auto dirs = plane.tangent_dirs(u);
  return {Line{e, dirs.first}, Line{e, dirs.second}};
}

LineCircleIntersection intersect_line_circle(const Plane& plane, const Line& line,
                                             const Circumference& circ) {
  const double nd = plane.norm(line.dir);
  if (nd == 0.0) throw std::invalid_argument("line direction must be nonzero");
  const Point w = line.base - circ.center;
  const double scale = std::max(1.0, circ.radius);
  auto h = [&](double t) { return plane.norm(w + t * line.dir) - circ.radius; };
  auto pt = [&](double t) { return line.base + t * line.dir; };

  // every intersection parameter satisfies |t| <= (radius + ||w||) / ||dir||;
  // doubling that keeps both bracket ends strictly outside the circle
  const double T = 2.0 * (circ.radius + plane.norm(w)) / nd;
  if (T == 0.0) {
    LineCircleIntersection out;
    if (std::abs(h(0.0)) <= 1e-9 * scale) {
      out.kind = LineCircleIntersection::Kind::One;
      out.a = line.base;
    }
    return out;
  }

  const MinResult m = golden_min(h, -T, T, 1e-13 * std::max(1.0, T));
  LineCircleIntersection out;
  if (m.value > 1e-9 * scale) return out;

  if (m.value < -1e-9 * scale) {
    const double t_tol = 1e-13 * std::max(1.0, T);
    const double ta = bisect_root(h, -T, m.t, h(-T), m.value, t_tol);
    const double tb = bisect_root(h, m.t, T, m.value, h(T), t_tol);
    out.kind = LineCircleIntersection::Kind::Two;
    out.a = pt(ta);
    out.b = pt(tb);
    return out;
  }

  // tangency zone: the set { h <= flat_tol } is an interval by convexity; its
  // endpoints tell a single touch point from a whole flat edge apart.  A
  // strictly convex ball cannot share a segment with a line, yet its contact
  // interval at tolerance flat_tol still has width ~ (flat_tol * radius)^(1/p)
  // or so, which is far from zero; only the polyhedral families may honestly
  // report a segment, and for them any flat contact is a macroscopic edge.
  const NormSpec& ns = plane.spec();
  const bool polyhedral =
      ns.kind != NormKind::Lp || ns.p == 1.0 || std::isinf(ns.p);
  const double flat_tol = std::max(1e-12 * scale, m.value + 1e-13 * scale);
  auto inside = [&](double t) { return h(t) <= flat_tol; };
  const double t_tol = 1e-13 * std::max(1.0, T);
  const double ta = predicate_boundary(inside, -T, m.t, t_tol);
  const double tb = predicate_boundary(inside, T, m.t, t_tol);
  const Point a = pt(ta);
  const Point b = pt(tb);
  if (polyhedral && euclid(b - a) > 1e-9 * scale) {
    out.kind = LineCircleIntersection::Kind::Segment;
    out.a = ta < tb ? a : b;
    out.b = ta < tb ? b : a;
  } else {
    out.kind = LineCircleIntersection::Kind::One;
    out.a = 0.5 * (a + b);
  }
  return out;
}

bool Arc::contains(const Plane& plane, Point p, double tol) const {
  const double scale = std::max(1.0, circle.radius);
  if (std::abs(plane.norm(p - circle.center) - circle.radius) > tol * scale) return false;
  if (euclid(p - v) <= tol * scale || euclid(p - w) <= tol * scale) return true;
  if (chord_flat) {
    const Point d = w - v;
    const bool collinear = std::abs(cross(d, p - v)) <= tol * scale * euclid(d);
    const double s = dot(p - v, d);
    const bool on_segment = collinear && s >= 0.0 && s <= dot(d, d);
    return plus_side ? on_segment : !on_segment;
  }
  const double s = cross(w - v, p - v);
  return plus_side ? s < 0.0 : s >= 0.0;
}

std::pair<Arc, Arc> split_arcs(const Plane& plane, const Circumference& circ, Point v, Point w) {
  const double scale = std::max(1.0, circ.radius);
  if (euclid(w - v) <= 1e-12 * scale) throw std::invalid_argument("arc endpoints must differ");
  if (std::abs(plane.norm(v - circ.center) - circ.radius) > 1e-9 * scale ||
      std::abs(plane.norm(w - circ.center) - circ.radius) > 1e-9 * scale) {
    throw std::invalid_argument("not a boundary point");
  }
  // if the chord midpoint sits on the circle the whole chord does (convexity)
  const Point mid = 0.5 * (v + w);
  const bool flat = std::abs(plane.norm(mid - circ.center) - circ.radius) <= 1e-9 * scale;
  Arc plus{circ, v, w, true, flat};
  Arc minus{circ, v, w, false, flat};
  return {plus, minus};
}

}  // namespace mink
