#pragma once

#include <cstddef>

namespace aupc {

struct GridPoint {
  double x;
  double y;
};

// Geometry of the whole plot. Pair i spans u in [-0.5, 1.5] with its left axis
// (u = 0) at canvas x = margin + W/2 + i*W, so each pair overhangs half a pair
// width into both neighbours.
struct CanvasLayout {
  int pair_width = 600;
  int height = 400;
  std::size_t pairs = 1;
  double v_lo = -1.0;
  double v_hi = 1.5;
  int margin = 16;
  // Density grid resolution; zero means one cell per canvas pixel.
  int grid_columns = 0;
  int grid_rows = 0;

  void validate() const;
  bool operator==(const CanvasLayout&) const = default;

  int canvas_width() const;
  int canvas_height() const;
  int columns() const { return grid_columns > 0 ? grid_columns : 2 * pair_width; }
  int rows() const { return grid_rows > 0 ? grid_rows : height; }

  // Density-grid coordinates, in cells (continuous).
  double grid_x(double u) const { return (u + 0.5) * 0.5 * columns(); }
  double grid_y(double v) const { return (v_hi - v) / (v_hi - v_lo) * rows(); }
  double u_of_grid(double x) const { return x / (0.5 * columns()) - 0.5; }
  double v_of_grid(double y) const { return v_hi - y / rows() * (v_hi - v_lo); }
  // Center of the cell (column, row) in (u, v).
  double cell_u(int column) const { return u_of_grid(column + 0.5); }
  double cell_v(int row) const { return v_of_grid(row + 0.5); }

  // Canvas pixel coordinates.
  int pair_origin_x(std::size_t pair) const;  // canvas x of u = -0.5
  double canvas_x(std::size_t pair, double u) const;
  double canvas_y(double v) const;
};

}  // namespace aupc
