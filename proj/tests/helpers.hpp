#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "minkgeom/norm.hpp"
#include "minkgeom/plane.hpp"
#include "minkgeom/rng.hpp"

namespace testutil {

constexpr double kPi = 3.14159265358979323846;

inline mink::NormSpec hexagon() {
  const double s = std::sqrt(3.0) / 2.0;
  return mink::NormSpec::polygon(
      {{1.0, 0.0}, {0.5, s}, {-0.5, s}, {-1.0, 0.0}, {-0.5, -s}, {0.5, -s}});
}

// the five norms every acceptance property runs over
inline std::vector<mink::NormSpec> acceptance_norms() {
  return {mink::NormSpec::lp(1.0), mink::NormSpec::lp(2.0), mink::NormSpec::lp(4.0),
          mink::NormSpec::lp(std::numeric_limits<double>::infinity()), hexagon()};
}

inline mink::Point random_point(mink::Rng& rng, double half) {
  return {rng.uniform(-half, half), rng.uniform(-half, half)};
}

inline mink::Point random_nonzero(mink::Rng& rng, double half) {
  for (;;) {
    mink::Point p = random_point(rng, half);
    if (mink::euclid(p) > 1e-3) return p;
  }
}

}  // namespace testutil
