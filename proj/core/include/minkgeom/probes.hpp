#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minkgeom/norm.hpp"
#include "minkgeom/ortho_system.hpp"
#include "minkgeom/plane.hpp"
#include "minkgeom/scenario.hpp"

namespace mink {

// the thirteen measured characterizations.  The first four probe the
// orthogonality relations directly (homogeneity of the isosceles relation,
// the two implications between isosceles and Birkhoff, chord midpoint
// collinearity); the rest drive a built scenario and measure its conclusion.
enum class ProbeId { L1, L2, L3, L4, T31, T32, T33, T34, T35, T36, T37, T38, T39 };

const char* to_string(ProbeId id);
ProbeId probe_id_from_string(const std::string& text);
const std::vector<ProbeId>& all_probe_ids();

struct ProbeConfig {
  NormSpec norm;
  ProbeId id = ProbeId::L1;
  int samples = 500;
  std::uint64_t seed = 1;
  double tol = 1e-9;  // hypothesis re-check tolerance
};

// the sample that achieved the maximum defect, with enough data to both
// understand and replay it: the replay key is (id, sample_seed)
struct Witness {
  int index = -1;
  std::uint64_t sample_seed = 0;
  double defect = 0.0;
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, Point>> points;
  std::optional<ScenarioKind> kind;
  std::optional<double> t0;
  std::optional<OrthoScenario> scenario;
};

struct DefectStats {
  double max = 0.0;
  double mean = 0.0;
  double p95 = 0.0;  // nearest-rank
};

struct ProbeReport {
  ProbeConfig config;
  DefectStats defects;
  int failures = 0;  // construction errors and hypothesis re-check rejections
  std::optional<Witness> witness;
  double runtime_ms = 0.0;  // measured; serialized reports pin it to 0
};

struct SampleResult {
  bool ok = false;
  double defect = 0.0;
};

// one sample of one probe, from its own seed; fills w when given.  Hypothesis
// violations and construction errors come back as ok = false.
SampleResult measure_sample(const Plane& plane, ProbeId id, std::uint64_t sample_seed, double tol,
                            Witness* w = nullptr);

// runs cfg.samples samples with per-sample seeds derive_seed(cfg.seed, i),
// then replays the argmax sample to capture the witness
ProbeReport probe(const Plane& plane, const ProbeConfig& cfg);

// all thirteen probes in fixed order; probe k runs with the derived seed
// derive_seed(seed, k), echoed in its report so any row can be replayed alone
std::vector<ProbeReport> run_battery(const Plane& plane, const NormSpec& norm, int samples,
                                     std::uint64_t seed, double tol);

// replays a witness by its sample seed; the result must reproduce the
// reported defect
SampleResult reeval_witness(const Plane& plane, ProbeId id, std::uint64_t sample_seed, double tol);

}  // namespace mink
