#include "minkgeom/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "minkgeom/distance.hpp"
#include "minkgeom/errors.hpp"
#include "minkgeom/ortho_system.hpp"
#include "minkgeom/plane.hpp"
#include "minkgeom/probes.hpp"
#include "minkgeom/report_io.hpp"
#include "minkgeom/rng.hpp"
#include "minkgeom/scenario.hpp"
#include "minkgeom/svg.hpp"

namespace mink {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
  f << content;
  if (!f) throw std::invalid_argument("cannot write output file '" + path + "'");
}

Point sample_box(Rng& rng, double half) {
  return {rng.uniform(-half, half), rng.uniform(-half, half)};
}

Point sample_box_away_from_zero(Rng& rng, double half) {
  for (;;) {
    Point p = sample_box(rng, half);
    if (euclid(p) > 1e-3) return p;
  }
}

// self-test of the geometric kernel on the given norm: norm axioms, duality
// pairing and its attainment, the two line-distance routes, and circle
// intersection and arc splitting on randomly placed circles
std::optional<std::string> kernel_suite(const Plane& plane, int samples, std::uint64_t seed) {
  for (int i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const Point u = sample_box_away_from_zero(rng, 2.0);
    const Point v = sample_box_away_from_zero(rng, 2.0);

    const double nu = plane.norm(u);
    const double nv = plane.norm(v);
    const double scale = 1.0 + nu + nv;
    if (plane.norm(u + v) > nu + nv + 1e-12 * scale) {
      return "triangle inequality failed at sample " + std::to_string(i);
    }
    if (std::abs(plane.norm(Point{-u.x, -u.y}) - nu) > 1e-12 * scale) {
      return "norm symmetry failed at sample " + std::to_string(i);
    }
    const double t = rng.uniform(-3.0, 3.0);
    if (std::abs(plane.norm(u * t) - std::abs(t) * nu) > 1e-12 * (1.0 + std::abs(t)) * scale) {
      return "norm homogeneity failed at sample " + std::to_string(i);
    }
    const double theta = rng.uniform(0.0, kTau);
    if (std::abs(plane.norm(plane.unit_point(theta)) - 1.0) > 1e-12) {
      return "unit_point is off the unit circle at sample " + std::to_string(i);
    }

    const Point fv = sample_box_away_from_zero(rng, 2.0);
    const Functional f{fv.x, fv.y};
    const double fd = plane.dual_norm(f);
    if (std::abs(f(u)) > fd * nu * (1.0 + 1e-12) + 1e-12) {
      return "duality pairing |f(u)| <= ||f||* ||u|| failed at sample " + std::to_string(i);
    }
    const Point s = plane.support_points(f).first;
    if (std::abs(plane.norm(s) - 1.0) > 1e-9 || std::abs(f(s) - fd) > 1e-9 * (1.0 + fd)) {
      return "support point does not attain the dual norm at sample " + std::to_string(i);
    }

    const Line line{sample_box(rng, 2.0), sample_box_away_from_zero(rng, 2.0)};
    const double d1 = dist_point_line(plane, u, line);
    const double d2 = dist_point_line_direct(plane, u, line);
    if (std::abs(d1 - d2) > 1e-8 * (1.0 + euclid(u) + euclid(line.base))) {
      return "line distance routes disagree at sample " + std::to_string(i);
    }

    const Circumference circ{sample_box(rng, 1.0), rng.uniform(0.5, 2.0)};
    const Point inner = circ.center + plane.unit_point(rng.uniform(0.0, kTau)) *
                                          (circ.radius * rng.uniform(0.0, 0.8));
    const Line secant{inner, sample_box_away_from_zero(rng, 1.0)};
    const auto hit = intersect_line_circle(plane, secant, circ);
    if (hit.kind != LineCircleIntersection::Kind::Two &&
        hit.kind != LineCircleIntersection::Kind::Segment) {
      return "secant through an interior point missed the circle at sample " + std::to_string(i);
    }
    const double ra = plane.norm(hit.a - circ.center);
    const double rb = plane.norm(hit.b - circ.center);
    if (std::abs(ra - circ.radius) > 1e-8 * (1.0 + circ.radius) ||
        std::abs(rb - circ.radius) > 1e-8 * (1.0 + circ.radius)) {
      return "intersection points are off the circle at sample " + std::to_string(i);
    }

    const Point w1 = circ.center + plane.unit_point(rng.uniform(0.0, kTau)) * circ.radius;
    Point w2 = w1;
    while (euclid(w2 - w1) < 1e-3) {
      w2 = circ.center + plane.unit_point(rng.uniform(0.0, kTau)) * circ.radius;
    }
    const auto arcs = split_arcs(plane, circ, w1, w2);
    const Point probe_pt = circ.center + plane.unit_point(rng.uniform(0.0, kTau)) * circ.radius;
    if (!arcs.first.contains(plane, probe_pt) && !arcs.second.contains(plane, probe_pt)) {
      return "arcs do not cover the circle at sample " + std::to_string(i);
    }
    for (const Point& e : {w1, w2}) {
      if (!arcs.first.contains(plane, e) || !arcs.second.contains(plane, e)) {
        return "chord endpoint missing from an arc at sample " + std::to_string(i);
      }
    }
  }
  return std::nullopt;
}

// random reflected systems must satisfy the defining identities to
// floating-point accuracy; the construction is affine, so this holds for any
// norm the caller selected
std::optional<std::string> theorem21_suite(int samples, std::uint64_t seed) {
  for (int i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const OrthoScenario s = build_system(sample_box(rng, 2.0), sample_box(rng, 2.0),
                                         sample_box(rng, 2.0), sample_box(rng, 2.0));
    const double res = system_identity_residual(s);
    if (res > 1e-12) {
      return "system identity residual " + format_double(res) + " at sample " + std::to_string(i);
    }
  }
  return std::nullopt;
}

// every scenario seeded from an isosceles-orthogonal pair must put p1, p3, p4
// on C(x2, lambda), p2, p3, p4 on C(x1, lambda), and x4 on C(p3, lambda)
std::optional<std::string> lemma22_suite(const Plane& plane, int samples, std::uint64_t seed) {
  for (int i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const double theta = rng.uniform(0.0, kTau);
    const double r = std::exp2(2.0 * rng.uniform01() - 1.0);
    const IsoPair pair = iso_seed(plane, theta, r);
    const OrthoScenario s = build_scenario(plane, pair, ScenarioKind::Median).scenario;

    const double radii[] = {plane.norm(s.x2 - s.p1), plane.norm(s.x2 - s.p3),
                            plane.norm(s.x2 - s.p4), plane.norm(s.x1 - s.p2),
                            plane.norm(s.x1 - s.p3), plane.norm(s.x1 - s.p4),
                            plane.norm(s.p3 - s.x4)};
    for (double rad : radii) {
      if (std::abs(rad - s.lambda) > 1e-9) {
        return "circumradius relation off by " + format_double(std::abs(rad - s.lambda)) +
               " at sample " + std::to_string(i);
      }
    }
    if (plane.norm(pair.z) > s.lambda + 1e-12) {
      return "||z|| exceeds lambda at sample " + std::to_string(i);
    }
  }
  return std::nullopt;
}

int run_check(const std::string& suite, const NormSpec& norm, int samples, std::uint64_t seed,
              std::ostream& out, std::ostream& err) {
  const Plane plane(norm);
  std::optional<std::string> failure;
  if (suite == "kernel") {
    failure = kernel_suite(plane, samples, seed);
  } else if (suite == "theorem21") {
    failure = theorem21_suite(samples, seed);
  } else if (suite == "lemma22") {
    failure = lemma22_suite(plane, samples, seed);
  } else {
    throw std::invalid_argument("unknown check suite '" + suite + "'");
  }
  if (failure) {
    err << "check " << suite << " failed: " << *failure << "\n";
    return 2;
  }
  out << "check " << suite << ": pass (" << samples << " samples, norm " << norm.to_string()
      << ")\n";
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"plane Minkowski geometry: constructions and euclidianity probes"};
  app.require_subcommand(1);

  std::string norm_text;
  std::string id_text;
  std::string kind_text;
  std::string suite_text;
  std::string scenario_path;
  std::string out_path;
  std::string csv_path;
  int samples = 500;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  double theta = 0.0;
  double r = 1.0;
  int density = 720;
  bool no_labels = false;

  auto* probe_cmd = app.add_subcommand("probe", "run one probe and report defect statistics");
  probe_cmd->add_option("--norm", norm_text, "norm spec, lp:<p> or polygon:x1,y1;...")
      ->required();
  probe_cmd->add_option("--id", id_text, "probe id, L1..L4 or T31..T39")->required();
  probe_cmd->add_option("--samples", samples, "sample count");
  probe_cmd->add_option("--seed", seed, "master seed");
  probe_cmd->add_option("--tol", tol, "hypothesis re-check tolerance");
  probe_cmd->add_option("--out", out_path, "report JSON path (stdout when omitted)");

  auto* battery_cmd = app.add_subcommand("battery", "run all thirteen probes");
  battery_cmd->add_option("--norm", norm_text, "norm spec")->required();
  battery_cmd->add_option("--samples", samples, "sample count per probe");
  battery_cmd->add_option("--seed", seed, "master seed");
  battery_cmd->add_option("--tol", tol, "hypothesis re-check tolerance");
  battery_cmd->add_option("--out", out_path, "battery JSON path (stdout when omitted)");
  battery_cmd->add_option("--csv", csv_path, "also write the battery as CSV to this path");

  auto* construct_cmd =
      app.add_subcommand("construct", "build one scenario from an isosceles seed");
  construct_cmd->add_option("--norm", norm_text, "norm spec")->required();
  construct_cmd->add_option("--kind", kind_text, "scenario kind")->required();
  construct_cmd->add_option("--theta", theta, "seed direction");
  construct_cmd->add_option("--r", r, "seed partner norm");
  construct_cmd->add_option("--out", out_path, "scenario JSON path (stdout when omitted)");

  auto* figure_cmd = app.add_subcommand("figure", "render a scenario JSON as SVG");
  figure_cmd->add_option("--scenario", scenario_path, "scenario JSON path")->required();
  figure_cmd->add_option("--out", out_path, "SVG path (stdout when omitted)");
  figure_cmd->add_option("--density", density, "samples per circle path");
  figure_cmd->add_flag("--no-labels", no_labels, "omit point labels");

  auto* check_cmd = app.add_subcommand("check", "run a named self-check suite");
  check_cmd->add_option("--suite", suite_text, "kernel, theorem21 or lemma22")->required();
  check_cmd->add_option("--norm", norm_text, "norm spec")->required();
  check_cmd->add_option("--samples", samples, "sample count");
  check_cmd->add_option("--seed", seed, "master seed");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(probe_cmd)) {
      const NormSpec norm = NormSpec::parse(norm_text);
      const Plane plane(norm);
      ProbeConfig cfg;
      cfg.norm = norm;
      cfg.id = probe_id_from_string(id_text);
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.tol = tol;
      const ProbeReport report = probe(plane, cfg);
      write_output(out_path, report_to_json(report), out);
      err << "runtime_ms " << report.runtime_ms << "\n";
    } else if (app.got_subcommand(battery_cmd)) {
      const NormSpec norm = NormSpec::parse(norm_text);
      const Plane plane(norm);
      const auto reports = run_battery(plane, norm, samples, seed, tol);
      double total_ms = 0.0;
      for (const auto& rep : reports) total_ms += rep.runtime_ms;
      if (!csv_path.empty()) write_output(csv_path, battery_to_csv(reports), out);
      if (csv_path.empty() || !out_path.empty()) {
        write_output(out_path, battery_to_json(reports), out);
      }
      err << "runtime_ms " << total_ms << "\n";
    } else if (app.got_subcommand(construct_cmd)) {
      const NormSpec norm = NormSpec::parse(norm_text);
      const Plane plane(norm);
      const IsoPair pair = iso_seed(plane, theta, r);
      const BuiltScenario built = build_scenario(plane, pair, scenario_kind_from_string(kind_text));
      ScenarioRecord record;
      record.norm = norm;
      record.scenario = built.scenario;
      record.kind = built.kind;
      record.seed_theta = theta;
      record.seed_r = r;
      record.t0 = built.t0;
      write_output(out_path, scenario_record_to_json(record), out);
    } else if (app.got_subcommand(figure_cmd)) {
      FigureSpec spec;
      spec.record = scenario_record_from_json(read_file(scenario_path));
      spec.density = density;
      spec.labels = !no_labels;
      write_output(out_path, emit_figure(spec), out);
    } else if (app.got_subcommand(check_cmd)) {
      return run_check(suite_text, NormSpec::parse(norm_text), samples, seed, out, err);
    }
  } catch (const construction_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace mink
