#include "minkgeom/probes.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "minkgeom/bisectors.hpp"
#include "minkgeom/distance.hpp"
#include "minkgeom/errors.hpp"
#include "minkgeom/orthogonality.hpp"
#include "minkgeom/rng.hpp"

namespace mink {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

const char* kProbeNames[13] = {"L1",  "L2",  "L3",  "L4",  "T31", "T32", "T33",
                               "T34", "T35", "T36", "T37", "T38", "T39"};

double sample_theta(Rng& rng) { return kTwoPi * rng.uniform01(); }

// log-uniform in [1/2, 2]
double sample_r(Rng& rng) { return std::exp2(2.0 * rng.uniform01() - 1.0); }

double collinearity_residual(Point a, Point b, Point c) {
  const Point u = b - a;
  const Point v = c - a;
  const double nu = euclid(u);
  const double nv = euclid(v);
  if (nu < 1e-12 || nv < 1e-12) return 0.0;
  return std::abs(cross(u, v)) / (nu * nv);
}

Line chord_line(const OrthoScenario& s) { return Line{s.p1, s.p2 - s.p1}; }

Line median_line(const OrthoScenario& s) {
  return Line{s.p3, 0.5 * (s.p1 + s.p2) - s.p3};
}

double support_line_defect(const Plane& plane, const OrthoScenario& s) {
  const Line l = chord_line(s);
  const double d1 = std::abs(dist_point_line(plane, s.x1, l) - s.lambda);
  const double d2 = std::abs(dist_point_line(plane, s.x2, l) - s.lambda);
  return std::max(d1, d2) / s.lambda;
}

double busemann_alignment(const Plane& plane, const OrthoScenario& s) {
  const Ray bis = busemann_bisector(plane, AngleSpec{s.p3, s.p1, s.p2});
  const Point w = s.p4 - s.p3;
  return std::abs(cross(bis.dir, w)) / (euclid(bis.dir) * euclid(w));
}

void record_pair(Witness* w, double theta, Point x, Point y) {
  if (!w) return;
  w->values.emplace_back("theta", theta);
  w->points.emplace_back("x", x);
  w->points.emplace_back("y", y);
}

void record_scenario(Witness* w, double theta, double r, const BuiltScenario& built) {
  if (!w) return;
  w->values.emplace_back("theta", theta);
  w->values.emplace_back("r", r);
  w->kind = built.kind;
  w->t0 = built.t0;
  w->scenario = built.scenario;
}

// scenario probes share their skeleton: seed a pair, build one kind, re-check
// the enforced hypothesis, then measure the conclusion.  hypothesis_excess
// returns defect minus allowance; positive means the re-check failed.
template <class Hyp, class Conc>
SampleResult scenario_sample(const Plane& plane, std::uint64_t sample_seed, ScenarioKind kind,
                             Hyp&& hypothesis_excess, Conc&& conclusion_defect, Witness* w) {
  Rng rng(sample_seed);
  const double theta = sample_theta(rng);
  const double r = sample_r(rng);
  const IsoPair pair = iso_seed(plane, theta, r);
  const BuiltScenario built = build_scenario(plane, pair, kind);
  if (hypothesis_excess(built.scenario) > 0.0) return {};
  record_scenario(w, theta, r, built);
  return {true, conclusion_defect(built.scenario)};
}

SampleResult measure_l1(const Plane& plane, std::uint64_t sample_seed, double tol, Witness* w) {
  Rng rng(sample_seed);
  const double theta = sample_theta(rng);
  const Point x = plane.unit_point(theta);
  const Point y = isosceles_partner(plane, x, 1.0);
  if (std::abs(isosceles_defect(plane, x, y)) > tol) return {};
  double defect = 0.0;
  for (int k = 0; k <= 32; ++k) {
    const double t = 0.5 + 1.5 * k / 32.0;
    defect = std::max(defect, std::abs(isosceles_defect(plane, x, t * y)) / (1.0 + t));
  }
  record_pair(w, theta, x, y);
  return {true, defect};
}

SampleResult measure_l2(const Plane& plane, std::uint64_t sample_seed, double tol, Witness* w) {
  Rng rng(sample_seed);
  const double theta = sample_theta(rng);
  const Point x = plane.unit_point(theta);
  const Point y = isosceles_partner(plane, x, 1.0);
  if (std::abs(isosceles_defect(plane, x, y)) > tol) return {};
  record_pair(w, theta, x, y);
  return {true, birkhoff_defect(plane, x, y) / plane.norm(x)};
}

SampleResult measure_l3(const Plane& plane, std::uint64_t sample_seed, double tol, Witness* w) {
  Rng rng(sample_seed);
  const double theta = sample_theta(rng);
  const Point x = plane.unit_point(theta);
  const Point y = birkhoff_partner(plane, x).first;
  if (birkhoff_defect(plane, x, y) > tol) return {};
  record_pair(w, theta, x, y);
  return {true, std::abs(isosceles_defect(plane, x, y)) / plane.norm(x)};
}

SampleResult measure_l4(const Plane& plane, std::uint64_t sample_seed, double tol, Witness* w) {
  Rng rng(sample_seed);
  const double theta = sample_theta(rng);
  const Point d{std::cos(theta), std::sin(theta)};
  const Functional f = annihilator(d);
  const double fstar = plane.dual_norm(f);
  const Point base{f.a / (f.a * f.a + f.b * f.b), f.b / (f.a * f.a + f.b * f.b)};
  const Circumference unit{{0.0, 0.0}, 1.0};

  Point mids[17];
  for (int k = 0; k <= 16; ++k) {
    const double c = fstar * (-0.9 + 1.8 * k / 16.0);
    const auto hit = intersect_line_circle(plane, Line{c * base, d}, unit);
    Point a, b;
    switch (hit.kind) {
      case LineCircleIntersection::Kind::Two:
      case LineCircleIntersection::Kind::Segment:
        a = hit.a;
        b = hit.b;
        break;
      case LineCircleIntersection::Kind::One:
        a = b = hit.a;
        break;
      case LineCircleIntersection::Kind::Empty:
        return {};
    }
    if (std::abs(plane.norm(a) - 1.0) > tol || std::abs(plane.norm(b) - 1.0) > tol) return {};
    mids[k] = 0.5 * (a + b);
  }
  double defect = 0.0;
  for (int k = 1; k <= 15; ++k) {
    defect = std::max(defect, collinearity_residual(mids[0], mids[16], mids[k]));
  }
  if (w) {
    w->values.emplace_back("theta", theta);
    w->points.emplace_back("dir", d);
    w->points.emplace_back("mid_first", mids[0]);
    w->points.emplace_back("mid_center", mids[8]);
    w->points.emplace_back("mid_last", mids[16]);
  }
  return {true, defect};
}

SampleResult measure_t39(const Plane& plane, std::uint64_t sample_seed, double tol, Witness* w) {
  Rng rng(sample_seed);
  const Point p1 = plane.unit_point(sample_theta(rng));
  const Point q1 = plane.unit_point(sample_theta(rng));
  const Point p2 = plane.unit_point(sample_theta(rng));
  if (plane.norm(q1 - p1) < 1e-3 || plane.norm(p1 + q1) < 1e-3) return {};

  const Circumference unit{{0.0, 0.0}, 1.0};
  const Chord c1{unit, p1, q1};
  const ChordalPartner partner = chordal_partner(plane, c1, p2);
  if (chordal_check(plane, c1, partner.chord) > tol) return {};
  const Point q2 = partner.chord.q;

  const Point h = p1 + q1 + p2;
  const auto hit = intersect_line_circle(plane, Line{p2, h - p2}, unit);
  if (hit.kind != LineCircleIntersection::Kind::Two) return {};
  const double da = euclid(hit.a - p2);
  const double db = euclid(hit.b - p2);
  const Point near_p2 = da <= db ? hit.a : hit.b;
  const Point other = da <= db ? hit.b : hit.a;
  if (euclid(near_p2 - p2) > 1e-6) return {};
  if (euclid(other - p2) <= 1e-6) return {};

  const double d1 = plane.norm(q2 - other);
  const double res =
      collinearity_residual(0.5 * (p1 + q1), 0.5 * (p2 - q2), Point{0.0, 0.0});
  if (w) {
    w->points.emplace_back("p1", p1);
    w->points.emplace_back("q1", q1);
    w->points.emplace_back("p2", p2);
    w->points.emplace_back("q2", q2);
    w->points.emplace_back("h", h);
    w->points.emplace_back("second_hit", other);
  }
  return {true, std::max(d1, res)};
}

SampleResult measure_dispatch(const Plane& plane, ProbeId id, std::uint64_t sample_seed,
                              double tol, Witness* w) {
  auto stol = [&](double lambda) { return tol * std::max(1.0, lambda); };
  switch (id) {
    case ProbeId::L1:
      return measure_l1(plane, sample_seed, tol, w);
    case ProbeId::L2:
      return measure_l2(plane, sample_seed, tol, w);
    case ProbeId::L3:
      return measure_l3(plane, sample_seed, tol, w);
    case ProbeId::L4:
      return measure_l4(plane, sample_seed, tol, w);
    case ProbeId::T31:
      return scenario_sample(
          plane, sample_seed, ScenarioKind::Support,
          [&](const OrthoScenario& s) {
            return support_line_defect(plane, s) * s.lambda -
                   std::max(tol, 1e-8) * std::max(1.0, s.lambda);
          },
          [&](const OrthoScenario& s) {
            return std::abs(plane.norm(s.p3 - s.p1) - plane.norm(s.p3 - s.p2)) / s.lambda;
          },
          w);
    case ProbeId::T32:
      return scenario_sample(
          plane, sample_seed, ScenarioKind::Isodist,
          [&](const OrthoScenario& s) {
            return std::abs(plane.norm(s.p3 - s.p1) - plane.norm(s.p3 - s.p2)) - stol(s.lambda);
          },
          [&](const OrthoScenario& s) { return support_line_defect(plane, s); }, w);
    case ProbeId::T33:
      return scenario_sample(
          plane, sample_seed, ScenarioKind::Median,
          [&](const OrthoScenario& s) {
            return dist_point_line(plane, s.p4, median_line(s)) - stol(s.lambda);
          },
          [&](const OrthoScenario& s) { return support_line_defect(plane, s); }, w);
    case ProbeId::T34:
      return scenario_sample(
          plane, sample_seed, ScenarioKind::Support,
          [&](const OrthoScenario& s) {
            return support_line_defect(plane, s) * s.lambda -
                   std::max(tol, 1e-8) * std::max(1.0, s.lambda);
          },
          [&](const OrthoScenario& s) {
            return dist_point_line(plane, s.p4, median_line(s)) / s.lambda;
          },
          w);
    case ProbeId::T35:
      return scenario_sample(
          plane, sample_seed, ScenarioKind::Median,
          [&](const OrthoScenario& s) {
            return dist_point_line(plane, s.p4, median_line(s)) - stol(s.lambda);
          },
          [&](const OrthoScenario& s) { return busemann_alignment(plane, s); }, w);
    case ProbeId::T36:
      return scenario_sample(
          plane, sample_seed, ScenarioKind::Busemann,
          [&](const OrthoScenario& s) { return busemann_alignment(plane, s) - tol; },
          [&](const OrthoScenario& s) {
            return dist_point_line(plane, s.p4, median_line(s)) / s.lambda;
          },
          w);
    case ProbeId::T37:
      return scenario_sample(
          plane, sample_seed, ScenarioKind::Median,
          [&](const OrthoScenario& s) {
            return dist_point_line(plane, s.p4, median_line(s)) - stol(s.lambda);
          },
          [&](const OrthoScenario& s) {
            return std::abs(
                       dual_glogovskij_defect(plane, AngleSpec{s.p3, s.p1, s.p2}, s.p4)) /
                   s.lambda;
          },
          w);
    case ProbeId::T38:
      return scenario_sample(
          plane, sample_seed, ScenarioKind::DualGlogovskij,
          [&](const OrthoScenario& s) {
            return std::abs(
                       dual_glogovskij_defect(plane, AngleSpec{s.p3, s.p1, s.p2}, s.p4)) -
                   stol(s.lambda);
          },
          [&](const OrthoScenario& s) {
            return dist_point_line(plane, s.p4, median_line(s)) / s.lambda;
          },
          w);
    case ProbeId::T39:
      return measure_t39(plane, sample_seed, tol, w);
  }
  throw std::invalid_argument("unknown probe id");
}

}  // namespace

const char* to_string(ProbeId id) { return kProbeNames[static_cast<int>(id)]; }

ProbeId probe_id_from_string(const std::string& text) {
  for (int i = 0; i < 13; ++i) {
    if (text == kProbeNames[i]) return static_cast<ProbeId>(i);
  }
  throw std::invalid_argument("unknown probe id '" + text + "'");
}

const std::vector<ProbeId>& all_probe_ids() {
  static const std::vector<ProbeId> ids = [] {
    std::vector<ProbeId> v;
    for (int i = 0; i < 13; ++i) v.push_back(static_cast<ProbeId>(i));
    return v;
  }();
  return ids;
}

SampleResult measure_sample(const Plane& plane, ProbeId id, std::uint64_t sample_seed, double tol,
                            Witness* w) {
  try {
    return measure_dispatch(plane, id, sample_seed, tol, w);
  } catch (const construction_error&) {
    return {};
  } catch (const std::invalid_argument&) {
    return {};
  }
}

ProbeReport probe(const Plane& plane, const ProbeConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("samples must be at least 1");
  const auto start = std::chrono::steady_clock::now();

  ProbeReport report;
  report.config = cfg;
  std::vector<double> defects;
  defects.reserve(cfg.samples);
  int arg_max = -1;
  for (int i = 0; i < cfg.samples; ++i) {
    const std::uint64_t s = derive_seed(cfg.seed, i);
    const SampleResult res = measure_sample(plane, cfg.id, s, cfg.tol);
    if (!res.ok) {
      ++report.failures;
      continue;
    }
    if (arg_max < 0 || res.defect > report.defects.max) {
      report.defects.max = res.defect;
      arg_max = i;
    }
    defects.push_back(res.defect);
  }

  if (!defects.empty()) {
    double sum = 0.0;
    for (double d : defects) sum += d;
    report.defects.mean = sum / double(defects.size());
    std::sort(defects.begin(), defects.end());
    const int rank = int(std::ceil(0.95 * double(defects.size()))) - 1;
    report.defects.p95 = defects[std::max(0, rank)];
  }

  if (arg_max >= 0) {
    Witness w;
    w.index = arg_max;
    w.sample_seed = derive_seed(cfg.seed, arg_max);
    const SampleResult res = measure_sample(plane, cfg.id, w.sample_seed, cfg.tol, &w);
    w.defect = res.defect;
    report.witness = std::move(w);
  }

  const auto stop = std::chrono::steady_clock::now();
  report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

std::vector<ProbeReport> run_battery(const Plane& plane, const NormSpec& norm, int samples,
                                     std::uint64_t seed, double tol) {
  std::vector<ProbeReport> reports;
  reports.reserve(13);
  int k = 0;
  for (ProbeId id : all_probe_ids()) {
    ProbeConfig cfg;
    cfg.norm = norm;
    cfg.id = id;
    cfg.samples = samples;
    cfg.seed = derive_seed(seed, k++);
    cfg.tol = tol;
    reports.push_back(probe(plane, cfg));
  }
  return reports;
}

SampleResult reeval_witness(const Plane& plane, ProbeId id, std::uint64_t sample_seed,
                            double tol) {
  return measure_sample(plane, id, sample_seed, tol);
}

}  // namespace mink
