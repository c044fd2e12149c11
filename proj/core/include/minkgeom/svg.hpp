#pragma once

#include <string>

#include "minkgeom/report_io.hpp"

namespace mink {

struct FigureSpec {
  ScenarioRecord record;
  int density = 720;  // sample count per circle, at least 32
  bool labels = true;
};

// Renders the scenario: the unit circle of its norm, the circles C(x1, lambda),
// C(x2, lambda) and C(O, lambda/2), the three parallel lines through x1x2,
// through the reflected points S_x1(p3) and S_x2(p3), and through p1p2, and a
// labeled marker for every named point.  Output bytes depend only on the spec.
std::string emit_figure(const FigureSpec& spec);

}  // namespace mink
