#pragma once

#include <string>

#include "ttp/schedule.hpp"

namespace ttp {

/// Constant distance 1 between all venue pairs.
Instance gen_con(int n);
/// Venues equidistant on a circle; d(i,j) = min(|i-j|, n-|i-j|).
Instance gen_circ(int n);
/// Venues equidistant on a line; d(i,j) = |i-j|.
Instance gen_line(int n);
/// Venues on a line with growing gaps: positions 0, 1, 3, 6, ... where the
/// gap between venues i and i+1 is i.
Instance gen_incr(int n);

/// Dispatch by family name ("con", "circ", "line", "incr").
Instance gen_family(const std::string& family, int n);

/// Reads the instance subset of the RobinX exchange format: the team list
/// under Resources and the distance entries (attributes team1, team2,
/// dist). Team ids may be 0- or 1-based; detected from their range. All
/// other sections are ignored. Throws std::runtime_error on malformed
/// files or incomplete distance matrices, naming the offending pair.
Instance parse_robinx(const std::string& path);

/// Writes the same subset, 0-based team ids.
void write_robinx(const Instance& inst, const std::string& path);

}  // namespace ttp
