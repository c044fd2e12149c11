#pragma once

#include <optional>
#include <utility>

#include "minkgeom/geometry.hpp"
#include "minkgeom/plane.hpp"

namespace mink {

// signed defect of isosceles orthogonality: ||x + y|| - ||x - y||.
// x is isosceles orthogonal to y when this vanishes.
double isosceles_defect(const Plane& plane, Point x, Point y);

// defect of Birkhoff orthogonality: ||x|| - min over t of ||x + t y||.
// Nonnegative, zero exactly when the line through x with direction y supports
// the circle through x.  Note the relation is not symmetric.
double birkhoff_defect(const Plane& plane, Point x, Point y);

// a point z with ||z|| = r and isosceles_defect(x, z) = 0.  Roots of
// theta -> defect(x, r unit_point(theta)) always exist because the defect is
// antisymmetric under theta -> theta + pi.  Without theta_ref the root with
// the smallest parameter in [0, 2pi) is returned; with it, the root closest
// to theta_ref on the circle.
Point isosceles_partner(const Plane& plane, Point x, double r,
                        std::optional<double> theta_ref = std::nullopt);

// extreme directions y with x Birkhoff orthogonal to y: the tangent cone of
// the circle through x, counterclockwise extreme first, normalized to norm 1.
// The two coincide for smooth norms.
std::pair<Point, Point> birkhoff_partner(const Plane& plane, Point x);

// the reverse question: unit circle points u with u Birkhoff orthogonal to x.
// These are the maximizers of v -> cross(x, v) over the unit circle, i.e. the
// support set of the functional annihilating x, on the counterclockwise side
// of x.  Counterclockwise-most extreme first; coincident when unique.
std::pair<Point, Point> birkhoff_partners_to(const Plane& plane, Point x);

// chord of a circle, endpoints on the boundary
struct Chord {
  Circumference circle;
  Point p, q;
};

// parallelism defect of chordal orthogonality on the unit circle: zero when
// the line through q2 and the antipode of p2 is parallel to c1.  When q2 is
// itself the antipode of p2 the line degenerates, and the defect becomes the
// angular gap between c1's direction and the support cone at q2 (zero when
// some support line there is parallel to c1).
double chordal_check(const Plane& plane, const Chord& c1, const Chord& c2);

struct ChordalPartner {
  Chord chord;
  // true when the line through -p2 with c1's direction only supports the
  // circle at -p2, so the partner chord collapses to [p2, -p2]
  bool degenerate = false;
};

// completes p2 to a chord [p2, q2] chordally orthogonal to c1: q2 is where the
// line through -p2 with direction c1 leaves the unit circle again (the far
// endpoint when it runs along a flat edge)
ChordalPartner chordal_partner(const Plane& plane, const Chord& c1, Point p2);

}  // namespace mink
