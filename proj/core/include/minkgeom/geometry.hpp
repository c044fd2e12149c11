#pragma once

#include <cmath>
#include <algorithm>

namespace mink {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
constexpr Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
constexpr Point operator*(Point a, double k) { return {k * a.x, k * a.y}; }
constexpr Point operator/(Point a, double k) { return {a.x / k, a.y / k}; }

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

// quarter turn counterclockwise
constexpr Point rot90(Point a) { return {-a.y, a.x}; }

inline double euclid(Point a) { return std::hypot(a.x, a.y); }
inline bool is_finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

// absolute tolerance scaled by the magnitude of the operands (max(1, m))
inline double scaled_tol(double tol, double m) { return tol * std::max(1.0, std::abs(m)); }
inline double scaled_tol(double tol, double m1, double m2) {
  return tol * std::max({1.0, std::abs(m1), std::abs(m2)});
}

// linear functional f(v) = a*v.x + b*v.y
struct Functional {
  double a = 0.0;
  double b = 0.0;
  double operator()(Point v) const { return a * v.x + b * v.y; }
};

// functional annihilating a direction, sign-normalized so the first nonzero
// coordinate is positive
inline Functional annihilator(Point dir) {
  Functional f{-dir.y, dir.x};
  if (f.a < 0.0 || (f.a == 0.0 && f.b < 0.0)) { f.a = -f.a; f.b = -f.b; }
  return f;
}

struct Line {
  Point base;
  Point dir;
};

struct Ray {
  Point apex;
  Point dir;
};

struct Segment {
  Point a;
  Point b;
};

struct Circumference {
  Point center;
  double radius = 1.0;
};

// reflection of w through p
constexpr Point point_symmetry(Point p, Point w) { return 2.0 * p - w; }

// homothety with center p and ratio k
constexpr Point homothety(Point p, double k, Point w) { return (1.0 - k) * p + k * w; }

}  // namespace mink
