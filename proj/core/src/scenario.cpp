#include "minkgeom/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "minkgeom/bisectors.hpp"
#include "minkgeom/errors.hpp"
#include "minkgeom/minimize.hpp"
#include "minkgeom/orthogonality.hpp"

namespace mink {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kEps = 1e-6;  // root brackets stay off the open endpoints

double wrap_pm_pi(double a) {
  a = std::fmod(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  if (a > kPi) a -= kTwoPi;
  return a;
}

OrthoScenario complete(const IsoPair& pair, Point x3) {
  OrthoScenario s = build_system(pair.x, Point{0.0, 0.0} - pair.x, x3, pair.z);
  s.lambda = pair.lambda;
  return s;
}

// root of g over the family parameter; smallest root semantics, endpoint
// values carried in the error message when no bracket shows up
template <class G>
double family_root(G&& g, const char* what) {
  const double glo = g(kEps);
  const double ghi = g(1.0 - kEps);
  const double ztol = 1e-12 * (1.0 + std::abs(glo) + std::abs(ghi));
  const auto t0 = first_root(g, kEps, 1.0 - kEps, 64, ztol, 1e-13);
  if (!t0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "construction failed: %s has no root bracket, endpoints %.17g and %.17g", what,
                  glo, ghi);
    throw construction_error(buf);
  }
  return *t0;
}

}  // namespace

IsoPair iso_seed(const Plane& plane, double theta, double r) {
  IsoPair pair;
  pair.x = plane.unit_point(theta);
  pair.z = isosceles_partner(plane, pair.x, r);
  pair.lambda = plane.norm(pair.x + pair.z);
  if (std::abs(isosceles_defect(plane, pair.x, pair.z)) > 1e-9 * (1.0 + r)) {
    throw construction_error("seed pair lost isosceles orthogonality");
  }
  if (plane.norm(pair.z) > pair.lambda + 1e-12 * (1.0 + r)) {
    throw construction_error("seed pair violates ||z|| <= lambda");
  }
  return pair;
}

const char* to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Median: return "median";
    case ScenarioKind::Support: return "support";
    case ScenarioKind::Isodist: return "isodist";
    case ScenarioKind::Busemann: return "busemann";
    case ScenarioKind::Glogovskij: return "glogovskij";
    case ScenarioKind::DualGlogovskij: return "dual_glogovskij";
  }
  return "median";
}

ScenarioKind scenario_kind_from_string(const std::string& text) {
  if (text == "median") return ScenarioKind::Median;
  if (text == "support") return ScenarioKind::Support;
  if (text == "isodist") return ScenarioKind::Isodist;
  if (text == "busemann") return ScenarioKind::Busemann;
  if (text == "glogovskij") return ScenarioKind::Glogovskij;
  if (text == "dual_glogovskij") return ScenarioKind::DualGlogovskij;
  throw std::invalid_argument("unknown scenario kind '" + text + "'");
}

FamilyPoint family_x3(const Plane& plane, const IsoPair& pair, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("family parameter must lie in [0, 1]");
  }
  const Point x = pair.x;
  const Point z = pair.z;
  const Point ea = z - x;  // x3(0) - p4
  const Point eb = z + x;  // x3(1) - p4
  const double tha = std::atan2(ea.y, ea.x);
  double delta = wrap_pm_pi(std::atan2(eb.y, eb.x) - tha);

  // the sweep must stay on the side of the chord [2z-x, 2z+x] away from p3;
  // if the shorter angular route lands on p3's side, go the other way round
  const Point chord_base = 2.0 * z - x;
  const Point p3 = Point{0.0, 0.0} - z;
  const double side_p3 = cross(x, p3 - chord_base);
  const Point arc_mid = z + pair.lambda * plane.unit_point(tha + 0.5 * delta);
  const double side_mid = cross(x, arc_mid - chord_base);
  if (side_p3 * side_mid > 0.0) delta += delta > 0.0 ? -kTwoPi : kTwoPi;

  FamilyPoint fp;
  fp.x3 = z + pair.lambda * plane.unit_point(tha + t * delta);
  fp.q = 0.5 * (p3 + fp.x3);
  fp.p1 = 2.0 * fp.q - x;
  fp.p2 = 2.0 * fp.q + x;
  return fp;
}

BuiltScenario build_scenario(const Plane& plane, const IsoPair& pair, ScenarioKind kind) {
  const Point x = pair.x;
  const Point z = pair.z;
  BuiltScenario out;
  out.kind = kind;

  switch (kind) {
    case ScenarioKind::Median: {
      const Point q = (0.5 * pair.lambda / plane.norm(z)) * z;
      out.scenario = complete(pair, 2.0 * q + z);
      return out;
    }
    case ScenarioKind::Support: {
      Point u = birkhoff_partners_to(plane, x).first;
      if (cross(x, z) < 0.0) u = Point{0.0, 0.0} - u;
      const Point q = 0.5 * pair.lambda * u;
      out.scenario = complete(pair, 2.0 * q + z);
      return out;
    }
    case ScenarioKind::Isodist: {
      auto g = [&](double t) {
        const FamilyPoint fp = family_x3(plane, pair, t);
        const Point p3 = Point{0.0, 0.0} - z;
        return plane.norm(p3 - fp.p1) - plane.norm(p3 - fp.p2);
      };
      out.t0 = family_root(g, "equal chord distance");
      break;
    }
    case ScenarioKind::Busemann: {
      auto g = [&](double t) {
        const FamilyPoint fp = family_x3(plane, pair, t);
        const Point p3 = Point{0.0, 0.0} - z;
        const Ray bis = busemann_bisector(plane, AngleSpec{p3, fp.p1, fp.p2});
        return cross(bis.dir, 2.0 * z) / (euclid(bis.dir) * euclid(2.0 * z));
      };
      out.t0 = family_root(g, "Busemann alignment");
      break;
    }
    case ScenarioKind::Glogovskij: {
      auto g = [&](double t) {
        const FamilyPoint fp = family_x3(plane, pair, t);
        const Point p3 = Point{0.0, 0.0} - z;
        return glogovskij_defect(plane, AngleSpec{p3, fp.p1, fp.p2}, z);
      };
      out.t0 = family_root(g, "Glogovskij defect");
      break;
    }
    case ScenarioKind::DualGlogovskij: {
      auto g = [&](double t) { return phi(plane, pair, t); };
      out.t0 = family_root(g, "dual bisector function");
      break;
    }
  }
  out.scenario = complete(pair, family_x3(plane, pair, *out.t0).x3);
  return out;
}

double phi(const Plane& plane, const IsoPair& pair, double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw std::invalid_argument("phi is defined on the open interval (0, 1)");
  }
  const double nx = plane.norm(pair.x);
  const double nz = plane.norm(pair.z);
  const Point e1 = pair.x / nx;
  const Point e2 = pair.z / nz;
  const double det = cross(e1, e2);

  const Point x3 = family_x3(plane, pair, t).x3;
  const double a3 = cross(x3, e2) / det;
  const double b3 = cross(e1, x3) / det;

  // functionals annihilating the arm directions x3 -+ x, written in the basis
  // {e1, e2} and converted to standard coordinates by the inverse transpose
  auto to_standard = [&](double f1, double f2) {
    return Functional{(e2.y * f1 - e1.y * f2) / det, (-e2.x * f1 + e1.x * f2) / det};
  };
  const Functional F1 = to_standard(-b3, a3 - nx);
  const Functional F2 = to_standard(-b3, a3 + nx);
  return nz * (plane.dual_norm(F2) * (nx - a3) - plane.dual_norm(F1) * (nx + a3));
}

const char* to_string(SeparationVerdict verdict) {
  switch (verdict) {
    case SeparationVerdict::Separated: return "separated";
    case SeparationVerdict::Coincident: return "coincident";
    case SeparationVerdict::Neither: return "neither";
  }
  return "neither";
}

SeparationVerdict separation_check(const Plane& plane, const OrthoScenario& scn) {
  const double scale = std::max({1.0, euclid(scn.x1), euclid(scn.p4), scn.lambda});
  if (euclid(scn.p3 + scn.p4) > 1e-9 * scale || euclid(scn.x1 + scn.x2) > 1e-9 * scale) {
    throw std::invalid_argument("scenario was not built from an isosceles seed pair");
  }
  const Point d1 = point_symmetry(scn.x1, scn.p3);
  const Point d2 = point_symmetry(scn.x2, scn.p3);
  const Point dir0 = scn.x1 - scn.x2;
  const Point dir1 = d1 - d2;
  const Point dir2 = scn.p2 - scn.p1;
  auto parallel = [&](Point u, Point v) {
    return std::abs(cross(u, v)) <= 1e-9 * euclid(u) * euclid(v);
  };
  if (!parallel(dir0, dir1) || !parallel(dir0, dir2)) {
    throw std::invalid_argument("scenario lines are not parallel");
  }

  const Point u = rot90(dir0) / euclid(dir0);
  const double c_l1 = dot(u, d1);
  const double c_l2 = dot(u, scn.p1);
  const double c_p3 = dot(u, scn.p3);
  const double denom = 0.5 * (c_l1 - c_p3);
  if (std::abs(denom) <= 1e-12 * scale) return SeparationVerdict::Neither;

  const double s = (c_l2 - c_l1) / denom;
  if (s > 1e-9) return SeparationVerdict::Separated;
  if (std::abs(s) <= 1e-9) return SeparationVerdict::Coincident;
  return SeparationVerdict::Neither;
}

}  // namespace mink
