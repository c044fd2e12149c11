#pragma once

#include <utility>

#include "minkgeom/geometry.hpp"
#include "minkgeom/plane.hpp"

namespace mink {

// distance from x to the line, via the annihilating functional: if f kills the
// direction of L then d(x, L) = |f(x - base)| / ||f||*.  This is the primary
// route; dist_point_line_direct is the independent minimization used to cross
// check it, and the two are kept separate on purpose.
double dist_point_line(const Plane& plane, Point x, const Line& line);
double dist_point_line_direct(const Plane& plane, Point x, const Line& line);

double dist_point_ray(const Plane& plane, Point x, const Ray& ray);
double dist_point_segment(const Plane& plane, Point x, const Segment& seg);

// extreme support lines of the circle at a boundary point e (coincident at
// smooth points); first follows the counterclockwise tangent extreme
std::pair<Line, Line> support_lines_at(const Plane& plane, const Circumference& circ, Point e);

struct LineCircleIntersection {
  enum class Kind { Empty, One, Two, Segment };
  Kind kind = Kind::Empty;
  Point a{0.0, 0.0};  // One: the point; Two/Segment: smaller line parameter
  Point b{0.0, 0.0};  // Two/Segment: larger line parameter
};

LineCircleIntersection intersect_line_circle(const Plane& plane, const Line& line,
                                             const Circumference& circ);

// one of the two arcs a chord [v, w] cuts the circle into.  plus is the arc on
// the cross(w - v, p - v) < 0 side; when the chord itself lies on the circle
// (a flat edge), plus degenerates to the segment [v, w] and minus is the rest.
// The two arcs partition the circle, with v and w belonging to both.
struct Arc {
  Circumference circle;
  Point v, w;
  bool plus_side = true;
  bool chord_flat = false;

  bool contains(const Plane& plane, Point p, double tol = 1e-9) const;
};

std::pair<Arc, Arc> split_arcs(const Plane& plane, const Circumference& circ, Point v, Point w);

}  // namespace mink
