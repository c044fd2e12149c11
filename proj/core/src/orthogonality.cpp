#include "minkgeom/orthogonality.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "minkgeom/distance.hpp"
#include "minkgeom/errors.hpp"
#include "minkgeom/minimize.hpp"

namespace mink {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_two_pi(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

double circ_dist(double a, double b) {
  const double d = std::abs(wrap_two_pi(a) - wrap_two_pi(b));
  return std::min(d, kTwoPi - d);
}

// direction angle folded to [0, pi): lines, not rays
double angle_mod_pi(Point u) {
  double a = std::atan2(u.y, u.x);
  a = std::fmod(a, kPi);
  if (a < 0.0) a += kPi;
  return a;
}

void require_unit_chord(const Plane& plane, const Chord& c) {
  const bool centered = euclid(c.circle.center) <= 1e-9 && std::abs(c.circle.radius - 1.0) <= 1e-9;
  if (!centered || std::abs(plane.norm(c.p) - 1.0) > 1e-9 ||
      std::abs(plane.norm(c.q) - 1.0) > 1e-9) {
    throw std::invalid_argument("chordal orthogonality needs chords of the unit circle");
  }
}

}  // namespace

double isosceles_defect(const Plane& plane, Point x, Point y) {
  return plane.norm(x + y) - plane.norm(x - y);
}

double birkhoff_defect(const Plane& plane, Point x, Point y) {
  const double ny = plane.norm(y);
  if (ny == 0.0) throw std::invalid_argument("Birkhoff defect needs a nonzero second argument");
  const double nx = plane.norm(x);
  if (nx == 0.0) return 0.0;
  const double T = 2.0 * nx / ny;
  auto g = [&](double t) { return plane.norm(x + t * y); };
  const MinResult m = golden_min(g, -T, T, 1e-12 * std::max(1.0, T));
  return nx - std::min(m.value, nx);
}

Point isosceles_partner(const Plane& plane, Point x, double r,
                        std::optional<double> theta_ref) {
  if (plane.norm(x) == 0.0 || !(r > 0.0)) {
    throw std::invalid_argument("isosceles partner needs x != O and r > 0");
  }
  auto g = [&](double th) { return isosceles_defect(plane, x, r * plane.unit_point(th)); };
  const double ztol = 1e-12 * (plane.norm(x) + r);

  constexpr int kGrid = 720;
  std::vector<double> roots;
  double prev_th = 0.0;
  double prev = g(prev_th);
  for (int i = 1; i <= kGrid; ++i) {
    const double th = kTwoPi * i / kGrid;
    const double cur = g(th);
    if (std::abs(prev) <= ztol) {
      roots.push_back(prev_th);
    } else if (std::abs(cur) > ztol && prev * cur < 0.0) {
      roots.push_back(bisect_root(g, prev_th, th, prev, cur, 1e-13));
    }
    prev_th = th;
    prev = cur;
  }
  if (roots.empty()) throw construction_error("no isosceles partner bracket found");

  double best = roots.front();
  if (theta_ref) {
    for (double th : roots) {
      if (circ_dist(th, *theta_ref) < circ_dist(best, *theta_ref)) best = th;
    }
  }
  return r * plane.unit_point(best);
}

std::pair<Point, Point> birkhoff_partner(const Plane& plane, Point x) {
  if (plane.norm(x) == 0.0) throw std::invalid_argument("Birkhoff partner needs x != O");
  auto dirs = plane.tangent_dirs(x);
  return {dirs.first / plane.norm(dirs.first), dirs.second / plane.norm(dirs.second)};
}

std::pair<Point, Point> birkhoff_partners_to(const Plane& plane, Point x) {
  if (plane.norm(x) == 0.0) throw std::invalid_argument("Birkhoff partner needs x != O");
  return plane.support_points(Functional{-x.y, x.x});
}

double chordal_check(const Plane& plane, const Chord& c1, const Chord& c2) {
  require_unit_chord(plane, c1);
  require_unit_chord(plane, c2);
  const Point d1 = c1.q - c1.p;
  const Point a = Point{0.0, 0.0} - c2.p;
  const Point e = c2.q - a;
  if (euclid(e) > 1e-9) {
    return std::abs(cross(e, d1)) / (euclid(e) * euclid(d1));
  }
  // q2 is the antipode of p2: orthogonal exactly when some support line of the
  // circle at q2 runs parallel to c1
  const auto cone = plane.tangent_dirs(c2.q);
  const double lo = angle_mod_pi(cone.second);
  double span = angle_mod_pi(cone.first) - lo;
  span = std::fmod(span + kPi, kPi);
  double pos = angle_mod_pi(d1) - lo;
  pos = std::fmod(pos + kPi, kPi);
  if (pos < 0.0) pos += kPi;
  if (pos <= span) return 0.0;
  return std::min(pos - span, kPi - pos);
}

ChordalPartner chordal_partner(const Plane& plane, const Chord& c1, Point p2) {
  require_unit_chord(plane, c1);
  const Circumference unit{{0.0, 0.0}, 1.0};
  if (std::abs(plane.norm(p2) - 1.0) > 1e-9) {
    throw std::invalid_argument("chordal orthogonality needs chords of the unit circle");
  }

  // The line through a = -p2 with c1's direction already touches the circle
  // at a, so the generic intersection classifier is the wrong tool: when the
  // second crossing sits close to a, its tangency band would swallow both.
  // Solving g(t) = ||a + t d|| - 1 for the second root directly keeps the
  // bisection conditioning independent of how close the two roots are.
  const Point a = Point{0.0, 0.0} - p2;
  const Point d = (c1.q - c1.p) / euclid(c1.q - c1.p);
  const double T = 4.0 / plane.norm(d);
  const auto g = [&](double t) { return plane.norm(a + d * t) - 1.0; };

  ChordalPartner out;
  out.chord.circle = unit;
  out.chord.p = p2;

  const MinResult m = golden_min(g, -T, T, 1e-13 * T);
  if (m.value > 1e-9) throw construction_error("chordal partner line misses the circle");

  double t_far = 0.0;
  if (m.value < -1e-13) {
    // transversal secant: one root is t = 0 up to noise, the other is the
    // exit point we want
    const double t_tol = 1e-13 * std::max(1.0, T);
    const double ta = bisect_root(g, -T, m.t, g(-T), m.value, t_tol);
    const double tb = bisect_root(g, m.t, T, m.value, g(T), t_tol);
    t_far = std::abs(ta) >= std::abs(tb) ? ta : tb;
  } else {
    // tangent contact: a strictly convex circle meets the line at a alone, so
    // only the polyhedral families search the flat edge for a far endpoint
    const NormSpec& ns = plane.spec();
    const bool polyhedral =
        ns.kind != NormKind::Lp || ns.p == 1.0 || std::isinf(ns.p);
    if (polyhedral) {
      const double flat_tol = std::max(1e-12, m.value + 1e-13);
      const auto inside = [&](double t) { return g(t) <= flat_tol; };
      const double ta = predicate_boundary(inside, -T, m.t, 1e-13 * std::max(1.0, T));
      const double tb = predicate_boundary(inside, T, m.t, 1e-13 * std::max(1.0, T));
      t_far = std::abs(ta) >= std::abs(tb) ? ta : tb;
    }
  }

  if (std::abs(t_far) <= 1e-9) {  // d is Euclidean-unit, so t is arclength
    out.chord.q = a;
    out.degenerate = true;
    return out;
  }
  out.chord.q = a + d * t_far;
  return out;
}

}  // namespace mink
