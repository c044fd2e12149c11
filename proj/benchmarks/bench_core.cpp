#include <benchmark/benchmark.h>

#include <cmath>
#include <limits>
#include <vector>

#include "minkgeom/distance.hpp"
#include "minkgeom/orthogonality.hpp"
#include "minkgeom/ortho_system.hpp"
#include "minkgeom/probes.hpp"
#include "minkgeom/rng.hpp"
#include "minkgeom/scenario.hpp"

using namespace mink;

namespace {

constexpr double kPi = 3.14159265358979323846;

NormSpec hexagon_spec() {
  const double s = std::sqrt(3.0) / 2.0;
  return NormSpec::polygon(
      {{1.0, 0.0}, {0.5, s}, {-0.5, s}, {-1.0, 0.0}, {-0.5, -s}, {0.5, -s}});
}

std::vector<Point> sample_points(int n) {
  Rng rng(1);
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    pts.push_back({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
  }
  return pts;
}

void bench_norm(benchmark::State& state, const NormSpec& spec) {
  const Plane plane(spec);
  const auto pts = sample_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plane.norm(pts[i++ & 1023]));
  }
}

void norm_lp2(benchmark::State& state) { bench_norm(state, NormSpec::lp(2.0)); }
void norm_lp4(benchmark::State& state) { bench_norm(state, NormSpec::lp(4.0)); }
void norm_linf(benchmark::State& state) {
  bench_norm(state, NormSpec::lp(std::numeric_limits<double>::infinity()));
}
void norm_hexagon(benchmark::State& state) { bench_norm(state, hexagon_spec()); }

void dual_norm_hexagon(benchmark::State& state) {
  const Plane plane(hexagon_spec());
  const auto pts = sample_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const Point p = pts[i++ & 1023];
    benchmark::DoNotOptimize(plane.dual_norm(Functional{p.x, p.y}));
  }
}

void unit_point_lp4(benchmark::State& state) {
  const Plane plane(NormSpec::lp(4.0));
  double theta = 0.0;
  for (auto _ : state) {
    theta += 0.37;
    benchmark::DoNotOptimize(plane.unit_point(theta));
  }
}

void dist_line_functional(benchmark::State& state) {
  const Plane plane(NormSpec::lp(4.0));
  const auto pts = sample_points(1024);
  const Line line{{0.3, -0.2}, {1.0, 0.7}};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist_point_line(plane, pts[i++ & 1023], line));
  }
}

void dist_line_minimization(benchmark::State& state) {
  const Plane plane(NormSpec::lp(4.0));
  const auto pts = sample_points(1024);
  const Line line{{0.3, -0.2}, {1.0, 0.7}};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist_point_line_direct(plane, pts[i++ & 1023], line));
  }
}

void partner_search_hexagon(benchmark::State& state) {
  const Plane plane(hexagon_spec());
  double theta = 0.0;
  for (auto _ : state) {
    theta += 0.37;
    benchmark::DoNotOptimize(isosceles_partner(plane, plane.unit_point(theta), 1.0));
  }
}

void system_build(benchmark::State& state) {
  const auto pts = sample_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const Point a = pts[i++ & 1023];
    const Point b = pts[i++ & 1023];
    benchmark::DoNotOptimize(build_system(a, b, a + rot90(b), pts[i++ & 1023]));
  }
}

void scenario_median_lp4(benchmark::State& state) {
  const Plane plane(NormSpec::lp(4.0));
  double theta = 0.0;
  for (auto _ : state) {
    theta += 0.37;
    benchmark::DoNotOptimize(
        build_scenario(plane, iso_seed(plane, theta, 1.0), ScenarioKind::Median));
  }
}

void scenario_dual_glogovskij_lp4(benchmark::State& state) {
  const Plane plane(NormSpec::lp(4.0));
  double theta = 0.0;
  for (auto _ : state) {
    theta += 0.37;
    benchmark::DoNotOptimize(
        build_scenario(plane, iso_seed(plane, theta, 1.0), ScenarioKind::DualGlogovskij));
  }
}

void circumcenter_lp4(benchmark::State& state) {
  const Plane plane(NormSpec::lp(4.0));
  const Triangle tri{{1.0, 0.0}, {-1.0, 0.0}, {0.3, 0.8}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(circumcenters(plane, tri));
  }
}

void chordal_partner_hexagon(benchmark::State& state) {
  const Plane plane(hexagon_spec());
  const Circumference unit{{0.0, 0.0}, 1.0};
  double theta = 0.0;
  for (auto _ : state) {
    theta += 0.37;
    const Chord c1{unit, plane.unit_point(theta), plane.unit_point(theta + 1.1)};
    benchmark::DoNotOptimize(chordal_partner(plane, c1, plane.unit_point(theta + 2.3)));
  }
}

void probe_sample_t35(benchmark::State& state) {
  const Plane plane(NormSpec::lp(4.0));
  std::uint64_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_sample(plane, ProbeId::T35, derive_seed(1, k++), 1e-9));
  }
}

}  // namespace

BENCHMARK(norm_lp2);
BENCHMARK(norm_lp4);
BENCHMARK(norm_linf);
BENCHMARK(norm_hexagon);
BENCHMARK(dual_norm_hexagon);
BENCHMARK(unit_point_lp4);
BENCHMARK(dist_line_functional);
BENCHMARK(dist_line_minimization);
BENCHMARK(partner_search_hexagon);
BENCHMARK(system_build);
BENCHMARK(scenario_median_lp4);
BENCHMARK(scenario_dual_glogovskij_lp4);
BENCHMARK(circumcenter_lp4);
BENCHMARK(chordal_partner_hexagon);
BENCHMARK(probe_sample_t35);

BENCHMARK_MAIN();
