#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "minkgeom/distance.hpp"
#include "minkgeom/norm.hpp"
#include "minkgeom/plane.hpp"
#include "minkgeom/rng.hpp"

using namespace mink;
using testutil::kPi;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("norm spec parsing and validation") {
  CHECK(NormSpec::parse("lp:2").p == 2.0);
  CHECK(NormSpec::parse("lp:inf").p == kInf);
  CHECK(NormSpec::parse("lp:1.5").to_string() == "lp:1.5");
  const NormSpec hex = NormSpec::parse(testutil::hexagon().to_string());
  CHECK(hex.vertices.size() == 6);

  CHECK_THROWS_AS(NormSpec::parse("lp:0.5"), std::invalid_argument);
  CHECK_THROWS_WITH(NormSpec::parse("lp:0.5"), "p must be >= 1");
  CHECK_THROWS_AS(NormSpec::parse("lp:nan"), std::invalid_argument);
  CHECK_THROWS_AS(NormSpec::parse("polygon:1,0;-1,0"), std::invalid_argument);
  // not symmetric
  CHECK_THROWS_AS(NormSpec::polygon({{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.5, -0.5}}),
                  std::invalid_argument);
  // clockwise
  CHECK_THROWS_AS(NormSpec::polygon({{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("norm evaluation closed forms") {
  CHECK(Plane(NormSpec::lp(1.0)).norm({3.0, -4.0}) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(Plane(NormSpec::lp(kInf)).norm({3.0, -4.0}) == doctest::Approx(4.0).epsilon(1e-12));
  const Plane square(NormSpec::polygon({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}));
  CHECK(square.norm({3.0, -4.0}) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(Plane(NormSpec::lp(2.0)).norm({3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(Plane(NormSpec::lp(4.0)).norm({1.0, 1.0}) ==
        doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-12));
}

TEST_CASE("dual norm evaluation") {
  CHECK(Plane(NormSpec::lp(1.0)).dual_norm({3.0, -4.0}) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(Plane(NormSpec::lp(2.0)).dual_norm({3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-12));
  const Plane square(NormSpec::polygon({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}));
  CHECK(square.dual_norm({3.0, -4.0}) == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("dual of dual is the primal on sampled vectors") {
  for (const auto& spec : testutil::acceptance_norms()) {
    const Plane plane(spec);
    const Plane bidual(dual_of(dual_of(spec)));
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
      const Point v = testutil::random_nonzero(rng, 2.0);
      CHECK(plane.norm(v) == doctest::Approx(bidual.norm(v)).epsilon(1e-9));
    }
  }
}

TEST_CASE("unit_point lands on the unit circle") {
  CHECK(euclid(Plane(NormSpec::lp(2.0)).unit_point(0.0) - Point{1.0, 0.0}) < 1e-12);
  CHECK(euclid(Plane(NormSpec::lp(1.0)).unit_point(kPi / 2) - Point{0.0, 1.0}) < 1e-12);
  CHECK(euclid(Plane(NormSpec::lp(kInf)).unit_point(kPi / 4) - Point{1.0, 1.0}) < 1e-12);

  for (const auto& spec : testutil::acceptance_norms()) {
    const Plane plane(spec);
    for (int k = 0; k < 720; ++k) {
      CHECK(std::abs(plane.norm(plane.unit_point(2.0 * kPi * k / 720.0)) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("norm axioms on random samples") {
  for (const auto& spec : testutil::acceptance_norms()) {
    const Plane plane(spec);
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
      const Point u = testutil::random_point(rng, 2.0);
      const Point v = testutil::random_point(rng, 2.0);
      const double t = rng.uniform(-3.0, 3.0);
      CHECK(plane.norm(u + v) <= plane.norm(u) + plane.norm(v) + 1e-9);
      CHECK(plane.norm(u * t) ==
            doctest::Approx(std::abs(t) * plane.norm(u)).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("distance to a line, both routes") {
  const Plane l2(NormSpec::lp(2.0));
  const Plane l1(NormSpec::lp(1.0));
  const Plane linf(NormSpec::lp(kInf));
  const Line x_axis{{0.0, 0.0}, {1.0, 0.0}};
  CHECK(dist_point_line(l2, {0.0, 1.0}, x_axis) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dist_point_line(linf, {1.0, 0.0}, Line{{0.0, 0.0}, {1.0, 1.0}}) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(dist_point_line(l1, {1.0, 1.0}, x_axis) == doctest::Approx(1.0).epsilon(1e-12));

  for (const auto& spec : testutil::acceptance_norms()) {
    const Plane plane(spec);
    Rng rng(23);
    for (int i = 0; i < 1000; ++i) {
      const Point x = testutil::random_point(rng, 2.0);
      const Line line{testutil::random_point(rng, 2.0), testutil::random_nonzero(rng, 2.0)};
      const double via_functional = dist_point_line(plane, x, line);
      const double via_minimization = dist_point_line_direct(plane, x, line);
      CHECK(std::abs(via_functional - via_minimization) <= 1e-8);
    }
  }
}

TEST_CASE("distance to a ray") {
  const Plane l2(NormSpec::lp(2.0));
  const Ray east{{0.0, 0.0}, {1.0, 0.0}};
  CHECK(dist_point_ray(l2, {-1.0, 1.0}, east) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(dist_point_ray(l2, {1.0, 1.0}, east) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dist_point_ray(Plane(NormSpec::lp(kInf)), {2.0, 1.0}, east) ==
        doctest::Approx(1.0).epsilon(1e-9));

  // never closer than the full line, equal when the line minimizer is on the ray
  for (const auto& spec : testutil::acceptance_norms()) {
    const Plane plane(spec);
    Rng rng(29);
    for (int i = 0; i < 300; ++i) {
      const Point x = testutil::random_point(rng, 2.0);
      const Ray ray{testutil::random_point(rng, 2.0), testutil::random_nonzero(rng, 2.0)};
      CHECK(dist_point_ray(plane, x, ray) >=
            dist_point_line(plane, x, Line{ray.apex, ray.dir}) - 1e-12);
    }
  }
}

TEST_CASE("distance to a segment brackets the ray and line distances") {
  for (const auto& spec : testutil::acceptance_norms()) {
    const Plane plane(spec);
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
      const Point x = testutil::random_point(rng, 2.0);
      const Point a = testutil::random_point(rng, 2.0);
      const Point b = a + testutil::random_nonzero(rng, 2.0);
      const double ds = dist_point_segment(plane, x, Segment{a, b});
      CHECK(ds >= dist_point_ray(plane, x, Ray{a, b - a}) - 1e-12);
      CHECK(ds <= plane.norm(x - a) + 1e-12);
      CHECK(ds <= plane.norm(x - b) + 1e-12);
    }
  }
}

TEST_CASE("support lines at boundary points") {
  const Plane l2(NormSpec::lp(2.0));
  const Circumference unit{{0.0, 0.0}, 1.0};
  auto [s1, s2] = support_lines_at(l2, unit, {0.0, 1.0});
  CHECK(std::abs(cross(s1.dir, Point{1.0, 0.0})) < 1e-9 * euclid(s1.dir));
  CHECK(std::abs(cross(s2.dir, Point{1.0, 0.0})) < 1e-9 * euclid(s2.dir));

  const Plane linf(NormSpec::lp(kInf));
  auto [m1, m2] = support_lines_at(linf, unit, {1.0, 0.0});
  CHECK(std::abs(cross(m1.dir, Point{0.0, 1.0})) < 1e-9 * euclid(m1.dir));
  CHECK(std::abs(cross(m2.dir, Point{0.0, 1.0})) < 1e-9 * euclid(m2.dir));

  auto [c1, c2] = support_lines_at(linf, unit, {1.0, 1.0});
  // vertex cone: one extreme runs along each incident edge; the first is the
  // ccw-most one, i.e. the top edge a ccw walk continues onto
  const double a1 = std::abs(cross(c1.dir, Point{1.0, 0.0}));
  const double a2 = std::abs(cross(c2.dir, Point{0.0, 1.0}));
  CHECK(a1 < 1e-9 * euclid(c1.dir));
  CHECK(a2 < 1e-9 * euclid(c2.dir));

  CHECK_THROWS_AS(support_lines_at(l2, unit, {2.0, 0.0}), std::invalid_argument);

  for (const auto& spec : testutil::acceptance_norms()) {
    const Plane plane(spec);
    Rng rng(37);
    for (int i = 0; i < 200; ++i) {
      const Circumference circ{testutil::random_point(rng, 1.0), rng.uniform(0.5, 2.0)};
      const Point e =
          circ.center + plane.unit_point(rng.uniform(0.0, 2.0 * kPi)) * circ.radius;
      auto [t1, t2] = support_lines_at(plane, circ, e);
      CHECK(dist_point_line(plane, circ.center, t1) ==
            doctest::Approx(circ.radius).epsilon(1e-9));
      CHECK(dist_point_line(plane, circ.center, t2) ==
            doctest::Approx(circ.radius).epsilon(1e-9));
      if (spec.kind == NormKind::Lp && spec.p > 1.0 && spec.p < kInf) {
        CHECK(std::abs(cross(t1.dir / euclid(t1.dir), t2.dir / euclid(t2.dir))) < 1e-9);
      }
    }
  }
}

TEST_CASE("line-circle intersection shapes") {
  const Circumference unit{{0.0, 0.0}, 1.0};
  const Plane l2(NormSpec::lp(2.0));
  auto two = intersect_line_circle(l2, Line{{0.0, 0.0}, {1.0, 0.0}}, unit);
  REQUIRE(two.kind == LineCircleIntersection::Kind::Two);
  CHECK(euclid(two.a - Point{-1.0, 0.0}) < 1e-9);
  CHECK(euclid(two.b - Point{1.0, 0.0}) < 1e-9);

  const Plane linf(NormSpec::lp(kInf));
  auto flat = intersect_line_circle(linf, Line{{0.0, 1.0}, {1.0, 0.0}}, unit);
  REQUIRE(flat.kind == LineCircleIntersection::Kind::Segment);
  CHECK(euclid(flat.a - Point{-1.0, 1.0}) < 1e-8);
  CHECK(euclid(flat.b - Point{1.0, 1.0}) < 1e-8);

  const Plane l1(NormSpec::lp(1.0));
  auto diag = intersect_line_circle(l1, Line{{1.0, 0.0}, {-1.0, 1.0}}, unit);
  REQUIRE(diag.kind == LineCircleIntersection::Kind::Segment);
  CHECK(euclid(diag.a - Point{1.0, 0.0}) < 1e-8);
  CHECK(euclid(diag.b - Point{0.0, 1.0}) < 1e-8);

  auto tangent = intersect_line_circle(l2, Line{{0.0, 1.0}, {1.0, 0.0}}, unit);
  CHECK(tangent.kind == LineCircleIntersection::Kind::One);
  CHECK(euclid(tangent.a - Point{0.0, 1.0}) < 1e-4);

  auto missed = intersect_line_circle(l2, Line{{0.0, 2.0}, {1.0, 0.0}}, unit);
  CHECK(missed.kind == LineCircleIntersection::Kind::Empty);

  for (const auto& spec : testutil::acceptance_norms()) {
    const Plane plane(spec);
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
      const Circumference circ{testutil::random_point(rng, 1.0), rng.uniform(0.5, 2.0)};
      const Point inner = circ.center + plane.unit_point(rng.uniform(0.0, 2.0 * kPi)) *
                                            (circ.radius * rng.uniform(0.0, 0.8));
      const auto hit =
          intersect_line_circle(plane, Line{inner, testutil::random_nonzero(rng, 1.0)}, circ);
      REQUIRE((hit.kind == LineCircleIntersection::Kind::Two ||
               hit.kind == LineCircleIntersection::Kind::Segment));
      CHECK(std::abs(plane.norm(hit.a - circ.center) - circ.radius) <= 1e-8);
      CHECK(std::abs(plane.norm(hit.b - circ.center) - circ.radius) <= 1e-8);
    }
  }
}

TEST_CASE("affine symmetries") {
  CHECK(euclid(point_symmetry({1.0, 1.0}, {0.0, 0.0}) - Point{2.0, 2.0}) == 0.0);
  CHECK(euclid(homothety({0.0, 0.0}, -2.0, {1.0, 0.0}) - Point{-2.0, 0.0}) == 0.0);
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const Point p = testutil::random_point(rng, 2.0);
    const Point w = testutil::random_point(rng, 2.0);
    CHECK(euclid(point_symmetry(p, point_symmetry(p, w)) - w) < 1e-12);
    CHECK(euclid(point_symmetry(p, w) - homothety(p, -1.0, w)) == 0.0);
  }
}

TEST_CASE("arc splitting") {
  const Circumference unit{{0.0, 0.0}, 1.0};
  const Plane l2(NormSpec::lp(2.0));

  auto [plus, minus] = split_arcs(l2, unit, {1.0, 0.0}, {-1.0, 0.0});
  CHECK(plus.contains(l2, {0.0, 1.0}));
  CHECK(minus.contains(l2, {0.0, -1.0}));
  CHECK_FALSE(plus.contains(l2, {0.0, -1.0}));
  CHECK_FALSE(minus.contains(l2, {0.0, 1.0}));

  auto [plus2, minus2] = split_arcs(l2, unit, {0.0, 1.0}, {0.0, -1.0});
  CHECK(plus2.contains(l2, {-1.0, 0.0}));

  const Plane linf(NormSpec::lp(kInf));
  auto [flat_plus, flat_minus] = split_arcs(linf, unit, {1.0, 1.0}, {-1.0, 1.0});
  CHECK(flat_plus.chord_flat);
  CHECK(flat_plus.contains(linf, {0.0, 1.0}));
  CHECK(flat_minus.contains(linf, {0.0, -1.0}));
  CHECK_FALSE(flat_plus.contains(linf, {1.0, 0.0}));

  CHECK_THROWS_AS(split_arcs(l2, unit, {1.0, 0.0}, {1.0, 0.0}), std::invalid_argument);

  for (const auto& spec : testutil::acceptance_norms()) {
    const Plane plane(spec);
    Rng rng(47);
    for (int i = 0; i < 200; ++i) {
      const Circumference circ{testutil::random_point(rng, 1.0), rng.uniform(0.5, 2.0)};
      const Point v = circ.center + plane.unit_point(rng.uniform(0.0, 2.0 * kPi)) * circ.radius;
      Point w = v;
      while (euclid(w - v) < 1e-3) {
        w = circ.center + plane.unit_point(rng.uniform(0.0, 2.0 * kPi)) * circ.radius;
      }
      auto arcs = split_arcs(plane, circ, v, w);
      // strictly interior boundary points belong to exactly one arc
      const Point p = circ.center + plane.unit_point(rng.uniform(0.0, 2.0 * kPi)) * circ.radius;
      const bool in_plus = arcs.first.contains(plane, p);
      const bool in_minus = arcs.second.contains(plane, p);
      CHECK((in_plus || in_minus));
      if (euclid(p - v) > 1e-6 && euclid(p - w) > 1e-6) {
        const double side = cross(w - v, p - v);
        if (std::abs(side) > 1e-6) CHECK(in_plus != in_minus);
      }
      CHECK(arcs.first.contains(plane, v));
      CHECK(arcs.first.contains(plane, w));
      CHECK(arcs.second.contains(plane, v));
      CHECK(arcs.second.contains(plane, w));
    }
  }
}

TEST_CASE("zero directions and bad radii are rejected") {
  const Plane l2(NormSpec::lp(2.0));
  CHECK_THROWS_AS(l2.tangent_dirs({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(l2.support_points({0.0, 0.0}), std::invalid_argument);
}
