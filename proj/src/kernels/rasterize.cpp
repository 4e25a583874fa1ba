#include "aupc/kernels/rasterize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aupc::kernels {

namespace {

int start_cell(double c, double d, int n) {
  int i = static_cast<int>(std::floor(c));
  if (d < 0.0 && c == static_cast<double>(i)) --i;
  return std::clamp(i, 0, n - 1);
}

double quantize(double x) { return std::nearbyint(x / kDepositQuantum) * kDepositQuantum; }

}  // namespace

bool clip_segment(GridPoint& a, GridPoint& b, double x0, double y0, double x1, double y1) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  double t0 = 0.0;
  double t1 = 1.0;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {a.x - x0, x1 - a.x, a.y - y0, y1 - a.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return false;
      continue;
    }
    const double r = q[i] / p[i];
    if (p[i] < 0.0) {
      if (r > t1) return false;
      t0 = std::max(t0, r);
    } else {
      if (r < t0) return false;
      t1 = std::min(t1, r);
    }
  }
  const GridPoint start{a.x + t0 * dx, a.y + t0 * dy};
  const GridPoint end{a.x + t1 * dx, a.y + t1 * dy};
  a = start;
  b = end;
  return true;
}

void deposit_segment(Image1& grid, GridPoint a, GridPoint b, double weight) {
  const int w = grid.width();
  const int h = grid.height();
  if (w == 0 || h == 0) return;
  if (!clip_segment(a, b, 0.0, 0.0, w, h)) return;
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double length = std::hypot(dx, dy) * weight;
  if (!(length > 0.0)) return;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  int ix = start_cell(a.x, dx, w);
  int iy = start_cell(a.y, dy, h);
  const int step_x = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
  const int step_y = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);
  double t_max_x = step_x > 0 ? (ix + 1 - a.x) / dx : (step_x < 0 ? (ix - a.x) / dx : kInf);
  double t_max_y = step_y > 0 ? (iy + 1 - a.y) / dy : (step_y < 0 ? (iy - a.y) / dy : kInf);
  const double t_delta_x = step_x != 0 ? 1.0 / std::abs(dx) : kInf;
  const double t_delta_y = step_y != 0 ? 1.0 / std::abs(dy) : kInf;

  double t = 0.0;
  while (true) {
    const double t_next = std::min({t_max_x, t_max_y, 1.0});
    if (t_next > t) grid(ix, iy) += quantize(length * (t_next - t));
    if (t_next >= 1.0) break;
    t = t_next;
    // A corner crossing advances both indices.
    if (t_max_x == t_next) {
      ix += step_x;
      t_max_x += t_delta_x;
    }
    if (t_max_y == t_next) {
      iy += step_y;
      t_max_y += t_delta_y;
    }
    if (ix < 0 || ix >= w || iy < 0 || iy >= h) break;
  }
}

void deposit_polyline(Image1& grid, std::span<const GridPoint> points, double weight) {
  for (std::size_t i = 1; i < points.size(); ++i) deposit_segment(grid, points[i - 1], points[i], weight);
}

}  // namespace aupc::kernels
