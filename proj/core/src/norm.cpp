#include "minkgeom/norm.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mink {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

double parse_number(const std::string& token, const char* what) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + token + "'");
  }
  return v;
}

}  // namespace

NormSpec NormSpec::lp(double p) {
  NormSpec spec;
  spec.kind = NormKind::Lp;
  spec.p = p;
  validate(spec);
  return spec;
}

NormSpec NormSpec::polygon(std::vector<Point> vertices) {
  NormSpec spec;
  spec.kind = NormKind::Polygon;
  spec.p = 0.0;
  spec.vertices = std::move(vertices);
  validate(spec);
  return spec;
}

NormSpec NormSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("norm spec must look like 'lp:<p>' or 'polygon:x1,y1;...': '" +
                                text + "'");
  }
  const std::string head = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  if (head == "lp") {
    if (tail == "inf") return lp(std::numeric_limits<double>::infinity());
    return lp(parse_number(tail, "exponent"));
  }
  if (head == "polygon") {
    std::vector<Point> vs;
    std::stringstream ss(tail);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
      auto comma = pair.find(',');
      if (comma == std::string::npos) {
        throw std::invalid_argument("polygon vertex must be 'x,y': '" + pair + "'");
      }
      vs.push_back({parse_number(pair.substr(0, comma), "vertex coordinate"),
                    parse_number(pair.substr(comma + 1), "vertex coordinate")});
    }
    return polygon(std::move(vs));
  }
  throw std::invalid_argument("unknown norm kind '" + head + "'");
}

std::string NormSpec::to_string() const {
  if (kind == NormKind::Lp) {
    if (std::isinf(p)) return "lp:inf";
    return "lp:" + format_double(p);
  }
  std::string out = "polygon:";
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ';';
    out += format_double(vertices[i].x);
    out += ',';
    out += format_double(vertices[i].y);
  }
  return out;
}

bool NormSpec::is_euclidean() const { return kind == NormKind::Lp && p == 2.0; }

void validate(const NormSpec& spec) {
  if (spec.kind == NormKind::Lp) {
    if (std::isnan(spec.p) || spec.p < 1.0) {
      throw std::invalid_argument("p must be >= 1");
    }
    return;
  }
  const auto& vs = spec.vertices;
  const size_t n = vs.size();
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("polygon needs an even vertex count of at least 4");
  }
  for (const Point& v : vs) {
    if (!is_finite(v)) throw std::invalid_argument("polygon vertex is not finite");
  }
  double scale = 0.0;
  for (const Point& v : vs) scale = std::max(scale, std::max(std::abs(v.x), std::abs(v.y)));
  const double tol = 1e-12 * std::max(1.0, scale);
  for (size_t i = 0; i < n / 2; ++i) {
    const Point& a = vs[i];
    const Point& b = vs[i + n / 2];
    if (std::abs(a.x + b.x) > tol || std::abs(a.y + b.y) > tol) {
      throw std::invalid_argument("polygon must be symmetric: vertex i + n/2 must equal -vertex i");
    }
  }
  for (size_t i = 0; i < n; ++i) {
    const Point& a = vs[i];
    const Point& b = vs[(i + 1) % n];
    if (cross(a, b) <= tol * tol) {
      throw std::invalid_argument(
          "polygon must be strictly convex and counterclockwise with the origin inside");
    }
    const Point& c = vs[(i + 2) % n];
    if (cross(b - a, c - b) <= 0.0) {
      throw std::invalid_argument("polygon must be strictly convex and counterclockwise");
    }
  }
}

NormSpec dual_of(const NormSpec& spec) {
  if (spec.kind == NormKind::Lp) {
    if (std::isinf(spec.p)) return NormSpec::lp(1.0);
    if (spec.p == 1.0) return NormSpec::lp(std::numeric_limits<double>::infinity());
    return NormSpec::lp(spec.p / (spec.p - 1.0));
  }
  return NormSpec::polygon(polar_polygon(spec.vertices));
}

std::vector<Point> polar_polygon(const std::vector<Point>& vertices) {
  // each edge (v_i, v_j) of the primal polygon contributes the dual vertex u
  // with u . v_i = u . v_j = 1; solving the 2x2 system gives the formula below.
  const size_t n = vertices.size();
  std::vector<Point> dual;
  dual.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const Point& vi = vertices[i];
    const Point& vj = vertices[(i + 1) % n];
    const double d = cross(vi, vj);
    dual.push_back({(vj.y - vi.y) / d, (vi.x - vj.x) / d});
  }
  return dual;
}

}  // namespace mink
