#pragma once

#include <utility>
#include <vector>

#include "minkgeom/geometry.hpp"
#include "minkgeom/norm.hpp"

namespace mink {

// a two dimensional normed space.  Everything downstream (distances,
// orthogonality, bisectors, the scenario builders) talks to the geometry
// through this class, so it carries both the closed form Lp formulas and the
// polygonal support machinery.  L1 and Linf have exact polygon views (diamond
// and square) so that support queries work uniformly for every non smooth norm.
class Plane {
 public:
  explicit Plane(NormSpec spec);

  const NormSpec& spec() const { return spec_; }

  double norm(Point v) const;
  double dual_norm(Functional f) const;

  // boundary point of the unit circle on the ray with Euclidean angle theta
  Point unit_point(double theta) const;

  Plane dual() const { return Plane(dual_of(spec_)); }

  // true when the unit circle has a unique supporting line at every point
  // (Lp with 1 < p < infinity)
  bool smooth() const;

  // directions of the tangent cone of the norm circle through u (any u != 0),
  // oriented counterclockwise and not normalized.  first is the
  // counterclockwise extreme (the outgoing edge at a polygon vertex), second
  // the clockwise one; they coincide at smooth points and on edge interiors.
  std::pair<Point, Point> tangent_dirs(Point u) const;

  // maximizers of the functional f over the unit circle.  first is the
  // counterclockwise-most extreme point; both entries coincide when the
  // maximizer is unique.
  std::pair<Point, Point> support_points(Functional f) const;

  // polygon vertices backing the support machinery; empty for smooth norms
  const std::vector<Point>& polygon_view() const { return poly_; }

 private:
  std::size_t cone_index(Point u) const;

  NormSpec spec_;
  std::vector<Point> poly_;   // primal polygon (real one, or the L1/Linf view)
  std::vector<Point> polar_;  // its polar, one vertex per primal edge
};

}  // namespace mink
