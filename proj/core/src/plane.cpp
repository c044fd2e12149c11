#include "minkgeom/plane.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mink {

namespace {

double lp_norm(double p, Point v) {
  const double ax = std::abs(v.x);
  const double ay = std::abs(v.y);
  if (std::isinf(p)) return std::max(ax, ay);
  if (p == 1.0) return ax + ay;
  if (p == 2.0) return std::hypot(v.x, v.y);
  const double m = std::max(ax, ay);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(ax / m, p) + std::pow(ay / m, p), 1.0 / p);
}

double conjugate(double p) {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return p / (p - 1.0);
}

}  // namespace

Plane::Plane(NormSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  if (spec_.kind == NormKind::Polygon) {
    poly_ = spec_.vertices;
  } else if (spec_.p == 1.0) {
    poly_ = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  } else if (std::isinf(spec_.p)) {
    poly_ = {{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}};
  }
  if (!poly_.empty()) polar_ = polar_polygon(poly_);
}

double Plane::norm(Point v) const {
  if (spec_.kind == NormKind::Lp) return lp_norm(spec_.p, v);
  // gauge of the polygon = support function of its polar
  double best = 0.0;
  for (const Point& u : polar_) best = std::max(best, u.x * v.x + u.y * v.y);
  return best;
}

double Plane::dual_norm(Functional f) const {
  if (spec_.kind == NormKind::Lp) return lp_norm(conjugate(spec_.p), {f.a, f.b});
  double best = 0.0;
  for (const Point& v : poly_) best = std::max(best, std::abs(f(v)));
  return best;
}

Point Plane::unit_point(double theta) const {
  const Point d{std::cos(theta), std::sin(theta)};
  return d / norm(d);
}

bool Plane::smooth() const {
  return spec_.kind == NormKind::Lp && spec_.p > 1.0 && !std::isinf(spec_.p);
}

std::size_t Plane::cone_index(Point u) const {
  const std::size_t n = poly_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(poly_[i], u) >= 0.0 && cross(u, poly_[(i + 1) % n]) > 0.0) return i;
  }
  // u is collinear with some vertex and rounding kept it out of both adjacent
  // cones; snap to the matching vertex ray
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(poly_[i], u) == 0.0 && dot(poly_[i], u) > 0.0) return i;
  }
  throw std::invalid_argument("tangent cone query needs a nonzero vector");
}

std::pair<Point, Point> Plane::tangent_dirs(Point u) const {
  if (!is_finite(u) || (u.x == 0.0 && u.y == 0.0)) {
    throw std::invalid_argument("tangent cone query needs a nonzero vector");
  }
  if (smooth()) {
    const double p = spec_.p;
    const Point w = u / norm(u);
    const Point normal{std::copysign(std::pow(std::abs(w.x), p - 1.0), w.x),
                       std::copysign(std::pow(std::abs(w.y), p - 1.0), w.y)};
    const Point t = rot90(normal);
    return {t, t};
  }
  const std::size_t n = poly_.size();
  const std::size_t i = cone_index(u);
  const Point vi = poly_[i];
  const Point vj = poly_[(i + 1) % n];
  const double tol = 1e-9 * euclid(u);
  if (std::abs(cross(vi, u)) <= tol * euclid(vi)) {
    // at the vertex v_i: cone spans from the incoming edge to the outgoing one
    const Point prev = poly_[(i + n - 1) % n];
    return {vj - vi, vi - prev};
  }
  if (std::abs(cross(vj, u)) <= tol * euclid(vj)) {
    const Point next = poly_[(i + 2) % n];
    return {next - vj, vj - vi};
  }
  return {vj - vi, vj - vi};
}

std::pair<Point, Point> Plane::support_points(Functional f) const {
  if (!std::isfinite(f.a) || !std::isfinite(f.b) || (f.a == 0.0 && f.b == 0.0)) {
    throw std::invalid_argument("support query needs a nonzero functional");
  }
  if (smooth()) {
    const double q = conjugate(spec_.p);
    Point u{std::copysign(std::pow(std::abs(f.a), q - 1.0), f.a),
            std::copysign(std::pow(std::abs(f.b), q - 1.0), f.b)};
    u = u / norm(u);
    return {u, u};
  }
  const std::size_t n = poly_.size();
  double best = -std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f(poly_[i]);
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  const double tol = 1e-9 * std::max(1.0, std::abs(best));
  const std::size_t next = (arg + 1) % n;
  const std::size_t prev = (arg + n - 1) % n;
  const bool tie_next = f(poly_[next]) >= best - tol;
  const bool tie_prev = f(poly_[prev]) >= best - tol;
  if (tie_next) return {poly_[next], poly_[arg]};
  if (tie_prev) return {poly_[arg], poly_[prev]};
  return {poly_[arg], poly_[arg]};
}

}  // namespace mink
