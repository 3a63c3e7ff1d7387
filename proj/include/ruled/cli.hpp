#pragma once

// Command-line front end.  run_command is the whole CLI behind a
// testable surface: it parses argv, runs the library and writes text or
// JSON to `out`; errors map to exit codes
//   0 success, 2 precondition violation, 3 out-of-range, 4 parse error.

#include <iosfwd>
#include <string>
#include <vector>

#include "ruled/walls.hpp"

namespace ruled {

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

/// Deterministic SVG 1.1 picture of the ample cone sector in the
/// (alpha, beta) plane: one labeled ray per wall slope, plus the query
/// polarization if given.  Slopes above `max_slope` are clamped and
/// annotated.
std::string render_walls_svg(const std::vector<Wall>& walls,
                             const Polarization* h, const RuledSurface& s,
                             double max_slope = 20.0);

} // namespace ruled
