#include "minkgeom/bisectors.hpp"

#include <cmath>
#include <stdexcept>

#include "minkgeom/distance.hpp"

namespace mink {

void validate(const AngleSpec& ang) {
  const Point u = ang.a - ang.p;
  const Point v = ang.b - ang.p;
  const double scale = std::max({1.0, euclid(u), euclid(v)});
  if (std::abs(cross(u, v)) <= 1e-12 * scale * scale) {
    throw std::invalid_argument("degenerate angle");
  }
}

Ray busemann_bisector(const Plane& plane, const AngleSpec& ang) {
  validate(ang);
  const Point u = ang.a - ang.p;
  const Point v = ang.b - ang.p;
  return Ray{ang.p, u / plane.norm(u) + v / plane.norm(v)};
}

double glogovskij_defect(const Plane& plane, const AngleSpec& ang, Point x) {
  const double da = dist_point_ray(plane, x, Ray{ang.p, ang.a - ang.p});
  const double db = dist_point_ray(plane, x, Ray{ang.p, ang.b - ang.p});
  return da - db;
}

double dual_glogovskij_defect(const Plane& plane, const AngleSpec& ang, Point x) {
  const Functional fa = annihilator(ang.a - ang.p);
  const Functional fb = annihilator(ang.b - ang.p);
  const Point w = x - ang.p;
  return std::abs(fa(w)) / plane.dual_norm(fa) - std::abs(fb(w)) / plane.dual_norm(fb);
}

}  // namespace mink
