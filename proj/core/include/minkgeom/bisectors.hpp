#pragma once

#include "minkgeom/geometry.hpp"
#include "minkgeom/plane.hpp"

namespace mink {

// the angle at apex p with arms through a and b
struct AngleSpec {
  Point p, a, b;
};

// throws when the arms are collinear or degenerate
void validate(const AngleSpec& ang);

// ray from the apex along the sum of the unit arm vectors; passes through
// (a + b) / 2 whenever the arms have equal length
Ray busemann_bisector(const Plane& plane, const AngleSpec& ang);

// signed difference of ray distances d(x, [p,a)) - d(x, [p,b)).  x sits on the
// Glogovskij bisector when this vanishes; it vanishes at the apex exactly.
double glogovskij_defect(const Plane& plane, const AngleSpec& ang, Point x);

// the same equidistance measured in the dual: |f_a(x-p)|/||f_a||* minus
// |f_b(x-p)|/||f_b||*, with f_a, f_b annihilating the arm directions.  Each
// quotient is the distance from x to the full arm line, so this vanishes on
// the dual-plane Glogovskij bisector.
double dual_glogovskij_defect(const Plane& plane, const AngleSpec& ang, Point x);

}  // namespace mink
