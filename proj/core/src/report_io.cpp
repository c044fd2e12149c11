#include "minkgeom/report_io.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace mink {

namespace {

using ojson = nlohmann::ordered_json;

// nlohmann's own dump() prints doubles with the shortest representation,
// which is locale-safe but not what the file contract promises.  This writer
// owns the number formatting and keeps everything else from the library.
bool array_fits_inline(const ojson& a) {
  for (const auto& e : a) {
    if (e.is_object() || e.is_array()) return false;
  }
  return true;
}

void dump_value(const ojson& j, std::string& out, int indent) {
  const std::string pad(indent, ' ');
  const std::string pad_in(indent + 2, ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t k = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++k) {
        out += pad_in;
        out += ojson(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, indent + 2);
        out += (k + 1 < j.size()) ? ",\n" : "\n";
      }
      out += pad;
      out += '}';
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (array_fits_inline(j)) {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_value(j[i], out, indent);
        }
        out += ']';
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad_in;
        dump_value(j[i], out, indent + 2);
        out += (i + 1 < j.size()) ? ",\n" : "\n";
      }
      out += pad;
      out += ']';
      return;
    }
    case ojson::value_t::string:
      out += j.dump();
      return;
    case ojson::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case ojson::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      return;
    case ojson::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      return;
    case ojson::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += "null";
      return;
  }
}

std::string dump_document(const ojson& j) {
  std::string out;
  dump_value(j, out, 0);
  out += '\n';
  return out;
}

ojson point_json(const Point& p) { return ojson::array({p.x, p.y}); }

ojson scenario_json(const OrthoScenario& s) {
  ojson j = ojson::object();
  j["x1"] = point_json(s.x1);
  j["x2"] = point_json(s.x2);
  j["x3"] = point_json(s.x3);
  j["x4"] = point_json(s.x4);
  j["p1"] = point_json(s.p1);
  j["p2"] = point_json(s.p2);
  j["p3"] = point_json(s.p3);
  j["p4"] = point_json(s.p4);
  j["q"] = point_json(s.q);
  j["m1"] = point_json(s.m1);
  j["m2"] = point_json(s.m2);
  j["m3"] = point_json(s.m3);
  j["g"] = point_json(s.g);
  j["lambda"] = s.lambda;
  return j;
}

ojson witness_json(const Witness& w) {
  ojson j = ojson::object();
  j["index"] = w.index;
  j["sample_seed"] = w.sample_seed;
  j["defect"] = w.defect;
  ojson values = ojson::object();
  for (const auto& [name, v] : w.values) values[name] = v;
  j["values"] = values;
  if (!w.points.empty()) {
    ojson points = ojson::object();
    for (const auto& [name, p] : w.points) points[name] = point_json(p);
    j["points"] = points;
  }
  if (w.kind) j["kind"] = to_string(*w.kind);
  if (w.t0) j["t0"] = *w.t0;
  if (w.scenario) j["scenario"] = scenario_json(*w.scenario);
  return j;
}

ojson report_json(const ProbeReport& r) {
  ojson j = ojson::object();
  j["version"] = 1;
  j["norm"] = r.config.norm.to_string();
  j["id"] = to_string(r.config.id);
  j["samples"] = r.config.samples;
  j["seed"] = r.config.seed;
  j["tol"] = r.config.tol;
  ojson defects = ojson::object();
  defects["max"] = r.defects.max;
  defects["mean"] = r.defects.mean;
  defects["p95"] = r.defects.p95;
  j["defects"] = defects;
  j["failures"] = r.failures;
  j["witness"] = r.witness ? witness_json(*r.witness) : ojson(nullptr);
  // pinned so equal configs give equal bytes; the measured value goes to
  // stderr at the CLI layer instead
  j["runtime_ms"] = 0;
  return j;
}

double read_double(const ojson& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw std::invalid_argument(std::string("scenario JSON is missing number field '") + field +
                                "'");
  }
  const double v = j[field].get<double>();
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string("scenario JSON field '") + field + "' is not finite");
  }
  return v;
}

Point read_point(const ojson& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != 2 ||
      !j[field][0].is_number() || !j[field][1].is_number()) {
    throw std::invalid_argument(std::string("scenario JSON is missing point field '") + field +
                                "'");
  }
  Point p{j[field][0].get<double>(), j[field][1].get<double>()};
  if (!is_finite(p)) {
    throw std::invalid_argument(std::string("scenario JSON field '") + field + "' is not finite");
  }
  return p;
}

std::string read_string(const ojson& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw std::invalid_argument(std::string("scenario JSON is missing string field '") + field +
                                "'");
  }
  return j[field].get<std::string>();
}

// quote a CSV cell only when the bare text would change meaning
std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string scenario_record_to_json(const ScenarioRecord& record) {
  ojson j = scenario_json(record.scenario);
  j["kind"] = to_string(record.kind);
  j["seed_theta"] = record.seed_theta;
  j["seed_r"] = record.seed_r;
  if (record.t0) j["t0"] = *record.t0;
  if (record.kind == ScenarioKind::Support) j["support_extreme"] = "ccw";
  j["norm"] = record.norm.to_string();
  return dump_document(j);
}

ScenarioRecord scenario_record_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed scenario JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("malformed scenario JSON: not an object");

  ScenarioRecord record;
  record.norm = NormSpec::parse(read_string(j, "norm"));
  record.kind = scenario_kind_from_string(read_string(j, "kind"));
  record.seed_theta = read_double(j, "seed_theta");
  record.seed_r = read_double(j, "seed_r");
  if (j.contains("t0")) record.t0 = read_double(j, "t0");

  OrthoScenario& s = record.scenario;
  s.x1 = read_point(j, "x1");
  s.x2 = read_point(j, "x2");
  s.x3 = read_point(j, "x3");
  s.x4 = read_point(j, "x4");
  s.p1 = read_point(j, "p1");
  s.p2 = read_point(j, "p2");
  s.p3 = read_point(j, "p3");
  s.p4 = read_point(j, "p4");
  s.q = read_point(j, "q");
  s.m1 = read_point(j, "m1");
  s.m2 = read_point(j, "m2");
  s.m3 = read_point(j, "m3");
  s.g = read_point(j, "g");
  s.lambda = read_double(j, "lambda");
  return record;
}

std::string report_to_json(const ProbeReport& report) { return dump_document(report_json(report)); }

std::string battery_to_json(const std::vector<ProbeReport>& reports) {
  ojson arr = ojson::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return dump_document(arr);
}

std::string battery_to_csv(const std::vector<ProbeReport>& reports) {
  std::string out = "id,norm,samples,seed,tol,max,mean,p95,failures\n";
  for (const auto& r : reports) {
    out += to_string(r.config.id);
    out += ',';
    out += csv_cell(r.config.norm.to_string());
    out += ',';
    out += std::to_string(r.config.samples);
    out += ',';
    out += std::to_string(r.config.seed);
    out += ',';
    out += format_double(r.config.tol);
    out += ',';
    out += format_double(r.defects.max);
    out += ',';
    out += format_double(r.defects.mean);
    out += ',';
    out += format_double(r.defects.p95);
    out += ',';
    out += std::to_string(r.failures);
    out += '\n';
  }
  return out;
}

}  // namespace mink
