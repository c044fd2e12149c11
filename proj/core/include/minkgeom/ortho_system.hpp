#pragma once

#include "minkgeom/geometry.hpp"
#include "minkgeom/plane.hpp"

namespace mink {

struct Triangle {
  Point x1, x2, x3;
};

// the full four-point configuration: vertices x1..x4, the reflected points
// p1..p4, the common midpoint q of every segment [x_i, p_i], the side
// midpoints m1..m3 (m_i opposite x_i), the centroid g, and the circumradius
// lambda (0 when the construction did not involve one)
struct OrthoScenario {
  Point x1, x2, x3, x4;
  Point p1, p2, p3, p4;
  Point q;
  Point m1, m2, m3;
  Point g;
  double lambda = 0.0;
};

// reflects p4 through the three side midpoints and completes the system:
// p_i = S_{m_i}(p4), q = (x1 + x2 + x3 - p4) / 2, x4 = S_q(p4).  Pure affine
// arithmetic, independent of any norm.
OrthoScenario build_system(Point x1, Point x2, Point x3, Point p4);

// the triangle p1 p2 p3 from the same reflection construction
Triangle antitriangle(const Triangle& tri, Point p4);

// worst componentwise residual of the system identities, checked on both the
// x-quadruple and the p-quadruple: common midpoint q, difference exchange
// x_i - x_j = p_j - p_i, the four-index exchange x_i - p_j = p_k - x_l, and
// the homothety H_{g,-2} carrying p4 to x4 (and its swapped twin)
double system_identity_residual(const OrthoScenario& scn);

struct CircumcenterSet {
  enum class Kind { Empty, Single, Segment };
  Kind kind = Kind::Empty;
  Point a{0.0, 0.0};  // Single: the center; Segment: one endpoint
  Point b{0.0, 0.0};  // Segment: the other endpoint
};

// locates {p : ||p - x1|| = ||p - x2|| = ||p - x3||} by tracing the x1/x2
// equidistant curve along a transversal fan and root-finding the residual
// against x3.  Non-strictly-convex norms can produce a whole segment.  Every
// reported point is verified to have pairwise radius discrepancy <= 1e-8
// (scaled); the search window spans 32 triangle diameters, so centers of
// extremely flat triangles beyond it come back Empty.
CircumcenterSet circumcenters(const Plane& plane, const Triangle& tri);

// x4 = S_q(p4) for a triangle with circumcenter p4 (radius discrepancy
// checked at 1e-6); {x1, x2, x3, x4} is then an orthocentric system for the
// circle family of the plane
Point c_orthocenter(const Plane& plane, const Triangle& tri, Point p4);

// Euclidean radical axis of two circles; rejects any other norm
Line radical_axis(const Plane& plane, const Circumference& c1, const Circumference& c2);

}  // namespace mink
