#pragma once

#include <string>
#include <vector>

#include "minkgeom/norm.hpp"
#include "minkgeom/probes.hpp"
#include "minkgeom/scenario.hpp"

namespace mink {

// a constructed scenario together with the inputs that produced it, which is
// what the construct command writes and the figure command reads back
struct ScenarioRecord {
  NormSpec norm;
  OrthoScenario scenario;
  ScenarioKind kind = ScenarioKind::Median;
  double seed_theta = 0.0;
  double seed_r = 1.0;
  std::optional<double> t0;
};

// All serialization below is canonical: fixed key order, doubles printed with
// 17 significant digits, no locale dependence.  Equal inputs give equal bytes.

std::string scenario_record_to_json(const ScenarioRecord& record);
ScenarioRecord scenario_record_from_json(const std::string& text);

std::string report_to_json(const ProbeReport& report);

std::string battery_to_json(const std::vector<ProbeReport>& reports);
std::string battery_to_csv(const std::vector<ProbeReport>& reports);

}  // namespace mink
