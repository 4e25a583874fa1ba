#include "aupc/render/layout.hpp"

#include <cmath>

#include "aupc/core/error.hpp"

namespace aupc {

void CanvasLayout::validate() const {
  if (pair_width < 16 || height < 16) throw InvalidArgument("pair width and height must be >= 16 px");
  if (!(v_lo < v_hi) || !std::isfinite(v_lo) || !std::isfinite(v_hi)) {
    throw InvalidArgument("v range must satisfy v_lo < v_hi");
  }
  if (margin < 0) throw InvalidArgument("margin must be >= 0");
  if (pairs < 1) throw InvalidArgument("layout needs at least one attribute pair");
  if (grid_columns < 0 || grid_rows < 0) throw InvalidArgument("grid size must be >= 0");
}

int CanvasLayout::canvas_width() const {
  return static_cast<int>(pairs + 1) * pair_width + 2 * margin;
}

int CanvasLayout::canvas_height() const { return height + 2 * margin; }

int CanvasLayout::pair_origin_x(std::size_t pair) const {
  return margin + static_cast<int>(pair) * pair_width;
}

double CanvasLayout::canvas_x(std::size_t pair, double u) const {
  return pair_origin_x(pair) + (u + 0.5) * pair_width;
}

double CanvasLayout::canvas_y(double v) const {
  return margin + (v_hi - v) / (v_hi - v_lo) * height;
}

}  // namespace aupc
