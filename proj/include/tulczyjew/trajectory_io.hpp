#ifndef TULCZYJEW__TRAJECTORY_IO_HPP_
#define TULCZYJEW__TRAJECTORY_IO_HPP_

#include "tulczyjew/mechanics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tulczyjew {

/// t, g00..g{d-1}{d-1} (with attitude), A_1..A_n, X_1..X_n, energy, casimir.
std::vector<std::string> trajectory_columns(const TrajectoryRecord & rec);

/// Comma separated, header row, LF endings, 17 significant digits.
void write_csv(std::ostream & out, const TrajectoryRecord & rec);
TrajectoryRecord read_csv(std::istream & in);

/// One JSON object per row: {"t", "g" (row-major, optional), "A", "X", "energy", "casimir"}.
void write_json_lines(std::ostream & out, const TrajectoryRecord & rec);
TrajectoryRecord read_json_lines(std::istream & in);

/// %.17g formatting.
std::string format_number(double x);

}  // namespace tulczyjew

#endif
