#pragma once

#include <optional>
#include <string>

#include "minkgeom/geometry.hpp"
#include "minkgeom/ortho_system.hpp"
#include "minkgeom/plane.hpp"

namespace mink {

// an isosceles-orthogonal pair and the radius it induces.  lambda = ||x + z||
// equals ||x - z|| by the orthogonality, and ||z|| <= lambda always.
struct IsoPair {
  Point x, z;
  double lambda = 0.0;
};

// x = unit_point(theta), z = the isosceles partner of x with norm r
IsoPair iso_seed(const Plane& plane, double theta, double r);

enum class ScenarioKind { Median, Support, Isodist, Busemann, Glogovskij, DualGlogovskij };

const char* to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& text);

// the one-parameter family behind every root-found scenario: with x1 = x,
// x2 = -x, p3 = -z, p4 = z fixed, x3(t) sweeps the arc of C(p4, lambda) from
// 2z - x (t = 0) to 2z + x (t = 1) on the side of that chord away from p3.
// q(t) = (p3 + x3(t)) / 2 sits on C(O, lambda/2) automatically, and
// p_i(t) = 2 q(t) - x_i.
struct FamilyPoint {
  Point x3, q, p1, p2;
};

FamilyPoint family_x3(const Plane& plane, const IsoPair& pair, double t);

struct BuiltScenario {
  OrthoScenario scenario;
  ScenarioKind kind = ScenarioKind::Median;
  // arc parameter of the root the construction solved for, when there was one
  std::optional<double> t0;
};

// derives q per kind and completes the system so that p3 = -z exactly:
//   median          q = (lambda/2) z/||z||, putting p4 on <p3, (p1+p2)/2>
//   support         q = (lambda/2) u with u Birkhoff orthogonal to x, taken
//                   from the counterclockwise-most extreme on z's side, which
//                   makes <p1,p2> a common support line of C(x1,lambda) and
//                   C(x2,lambda)
//   isodist         root of ||p3 - p1(t)|| - ||p3 - p2(t)||
//   busemann        root of the alignment of p4 - p3 with the Busemann
//                   bisector direction of the angle p1(t) p3 p2(t)
//   glogovskij      root of the Glogovskij defect of p4 in that angle
//   dual_glogovskij root of phi below
// Root searches run over [1e-6, 1 - 1e-6] and throw construction_error with
// the endpoint values when no bracket exists; with several roots the smallest
// parameter wins.
BuiltScenario build_scenario(const Plane& plane, const IsoPair& pair, ScenarioKind kind);

// the dual-bisector membership function of the family, in the x/z basis:
// with (a3, b3) the coordinates of x3(t) in the basis {x/||x||, z/||z||} and
// F1, F2 the standard-coordinate functionals annihilating the arms of the
// angle p1 p3 p2, returns
//   ||z|| ( ||F2||* (||x|| - a3) - ||F1||* (||x|| + a3) ).
// Positive near t = 0, negative near t = 1, and proportional to the dual
// Glogovskij defect of p4 wherever |a3| <= ||x||.
double phi(const Plane& plane, const IsoPair& pair, double t);

enum class SeparationVerdict { Separated, Coincident, Neither };

const char* to_string(SeparationVerdict verdict);

// position of the line L1 = <S_x1(p3), S_x2(p3)> between p3 and the line
// <p1, p2>: Separated when p3 and <p1,p2> fall strictly on opposite sides of
// L1, Coincident when L1 and <p1,p2> agree, Neither otherwise.  For median
// scenarios the signed ratio reduces to lambda/||z|| - 1 exactly.
SeparationVerdict separation_check(const Plane& plane, const OrthoScenario& scn);

}  // namespace mink
