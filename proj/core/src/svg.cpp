#include "minkgeom/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minkgeom/plane.hpp"

namespace mink {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;
constexpr double kSide = 800.0;  // square canvas, world bbox plus margin fills it

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Mapper {
  double cx = 0.0, cy = 0.0, scale = 1.0;

  std::pair<double, double> operator()(const Point& p) const {
    return {(p.x - cx) * scale + kSide / 2, (cy - p.y) * scale + kSide / 2};
  }
};

void append_circle_path(std::string& out, const Mapper& map, const std::vector<Point>& samples) {
  out += "  <path d=\"";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto [x, y] = map(samples[i]);
    out += (i == 0) ? "M " : " L ";
    out += num(x);
    out += ' ';
    out += num(y);
  }
  // closing with an explicit repeat of the first sample keeps the on-path
  // point count equal to density + 1
  const auto [x0, y0] = map(samples.front());
  out += " L ";
  out += num(x0);
  out += ' ';
  out += num(y0);
  out += " Z\"/>\n";
}

void append_line(std::string& out, const Mapper& map, const Point& a, const Point& b,
                 double reach) {
  const double len = euclid(b - a);
  if (!(len > 1e-12 * (1.0 + euclid(a) + euclid(b)))) {
    throw std::invalid_argument("figure scenario has a degenerate line");
  }
  const Point d = (b - a) / len;
  const auto [x1, y1] = map(a - d * reach);
  const auto [x2, y2] = map(b + d * reach);
  out += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
         num(y2) + "\"/>\n";
}

}  // namespace

std::string emit_figure(const FigureSpec& spec) {
  if (spec.density < 32) throw std::invalid_argument("figure density must be at least 32");

  const Plane plane(spec.record.norm);
  const OrthoScenario& s = spec.record.scenario;

  const std::vector<std::pair<const char*, Point>> named = {
      {"x1", s.x1}, {"x2", s.x2}, {"x3", s.x3}, {"x4", s.x4}, {"p1", s.p1},
      {"p2", s.p2}, {"p3", s.p3}, {"p4", s.p4}, {"q", s.q},   {"m1", s.m1},
      {"m2", s.m2}, {"m3", s.m3}, {"g", s.g}};

  struct CircleSpec {
    Point center;
    double radius;
    const char* stroke;
    const char* dash;  // empty for solid
  };
  const std::vector<CircleSpec> circles = {
      {{0.0, 0.0}, 1.0, "#999999", ""},
      {s.x1, s.lambda, "#c0392b", ""},
      {s.x2, s.lambda, "#2980b9", ""},
      {{0.0, 0.0}, s.lambda / 2, "#7f8c8d", "6 4"}};

  std::vector<std::vector<Point>> circle_samples;
  circle_samples.reserve(circles.size());
  for (const auto& c : circles) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(spec.density));
    for (int k = 0; k < spec.density; ++k) {
      const double theta = kTau * k / spec.density;
      pts.push_back(c.center + plane.unit_point(theta) * c.radius);
    }
    circle_samples.push_back(std::move(pts));
  }

  double min_x = named.front().second.x, max_x = min_x;
  double min_y = named.front().second.y, max_y = min_y;
  auto grow = [&](const Point& p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (const auto& [name, p] : named) grow(p);
  for (const auto& pts : circle_samples) {
    for (const auto& p : pts) grow(p);
  }

  const double span = std::max({max_x - min_x, max_y - min_y, 1e-6});
  const double half = span / 2 * 1.1;  // 10% margin around the scene
  const Mapper map{(min_x + max_x) / 2, (min_y + max_y) / 2, kSide / 2 / half};
  const double reach = 4 * half;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

  for (std::size_t i = 0; i < circles.size(); ++i) {
    out += "<g fill=\"none\" stroke=\"";
    out += circles[i].stroke;
    out += "\" stroke-width=\"1\"";
    if (circles[i].dash[0] != '\0') {
      out += " stroke-dasharray=\"";
      out += circles[i].dash;
      out += "\"";
    }
    out += ">\n";
    append_circle_path(out, map, circle_samples[i]);
    out += "</g>\n";
  }

  out += "<g stroke=\"#27ae60\" stroke-width=\"1\">\n";
  append_line(out, map, s.x2, s.x1, reach);
  append_line(out, map, point_symmetry(s.x1, s.p3), point_symmetry(s.x2, s.p3), reach);
  append_line(out, map, s.p1, s.p2, reach);
  out += "</g>\n";

  out += "<g fill=\"#111111\">\n";
  for (const auto& [name, p] : named) {
    const auto [x, y] = map(p);
    out += "  <circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"2\"/>\n";
  }
  out += "</g>\n";

  if (spec.labels) {
    out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#111111\">\n";
    for (const auto& [name, p] : named) {
      const auto [x, y] = map(p);
      out += "  <text x=\"" + num(x + 4) + "\" y=\"" + num(y - 4) + "\">";
      out += name;
      out += "</text>\n";
    }
    out += "</g>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace mink
