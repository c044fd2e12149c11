#pragma once

#include <string>
#include <vector>

#include "minkgeom/geometry.hpp"

namespace mink {

enum class NormKind { Lp, Polygon };

// description of a norm on the plane: either an Lp norm (p in [1, inf], with
// p = infinity for the max norm) or the gauge of a symmetric convex polygon
// given by its counterclockwise vertex list.
struct NormSpec {
  NormKind kind = NormKind::Lp;
  double p = 2.0;                // Lp only; std::numeric_limits<double>::infinity() allowed
  std::vector<Point> vertices;   // Polygon only

  static NormSpec lp(double p);
  static NormSpec polygon(std::vector<Point> vertices);

  // grammar: "lp:<p>" with <p> a decimal >= 1 or "inf"; or
  // "polygon:x1,y1;x2,y2;..." with vertices counterclockwise and symmetric
  static NormSpec parse(const std::string& text);
  std::string to_string() const;

  bool is_euclidean() const;
};

// decimal form with 17 significant digits, round-trip exact for doubles
std::string format_double(double v);

// throws std::invalid_argument with a specific message on any violation
void validate(const NormSpec& spec);

// conjugate exponent / polar polygon
NormSpec dual_of(const NormSpec& spec);

// vertices of the polar polygon, one per edge (v[i], v[i+1]), counterclockwise
std::vector<Point> polar_polygon(const std::vector<Point>& vertices);

}  // namespace mink
