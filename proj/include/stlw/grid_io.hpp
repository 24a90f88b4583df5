#pragma once

#include "stlw/grid.hpp"

#include <iosfwd>
#include <string>

namespace stlw {

// Text format, one record per line:
//   STGRID 1 <ncells> <nfaces> <T> <x_lo> <x_hi> <h>
//   C <id> <layer> <nverts> t1 x1 t2 x2 ...
//   F <id> <I|B> <left|-1> <right|-1> ta xa tb xb
// Floats use the shortest decimal that round-trips, so a load reproduces the
// grid bit-exactly. Remap-line annotations are runtime-only and not dumped.
void dump_grid(const SpaceTimeGrid& grid, std::ostream& out);
void dump_grid_file(const SpaceTimeGrid& grid, const std::string& path);

SpaceTimeGrid load_grid(std::istream& in);
SpaceTimeGrid load_grid_file(const std::string& path);

// shortest round-trip decimal for a double
std::string format_double(double v);

}  // namespace stlw
