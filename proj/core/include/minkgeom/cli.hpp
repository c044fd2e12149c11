#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mink {

// Full command dispatch for the minkgeom tool.  args are in natural order and
// do not include the program name.  Returns the process exit code: 0 on
// success, 1 on invalid configuration, 2 on numerical construction failure
// (including a failed check suite).  Reports and figures go to `out` unless
// an output path was given; human-readable diagnostics go to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mink
