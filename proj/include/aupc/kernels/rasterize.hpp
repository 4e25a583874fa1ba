#pragma once

#include <span>

#include "aupc/render/image.hpp"
#include "aupc/render/layout.hpp"

namespace aupc::kernels {

// Every deposit is rounded to a multiple of this quantum. Sums of such values
// stay exact in double precision (up to 2^33 cells of path length per cell),
// so accumulation is associative and the result does not depend on record
// order or thread count.
inline constexpr double kDepositQuantum = 0x1.0p-20;

// Adds to every cell the length of the part of segment a-b inside that cell
// (grid units). The segment is clipped to the grid first; points on the far
// edges x == width or y == height belong to the last column/row.
void deposit_segment(Image1& grid, GridPoint a, GridPoint b, double weight = 1.0);

void deposit_polyline(Image1& grid, std::span<const GridPoint> points, double weight = 1.0);

// Liang-Barsky clip to [x0, x1] x [y0, y1]; returns false when nothing is left.
bool clip_segment(GridPoint& a, GridPoint& b, double x0, double y0, double x1, double y1);

}  // namespace aupc::kernels
