#include "aupc/analysis/brush.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aupc/core/curve.hpp"
#include "aupc/core/error.hpp"
#include "aupc/kernels/brush.hpp"

namespace aupc {

namespace {

bool inside(double x, double lo, double hi) { return x >= lo && x <= hi; }

void check_point(double u, double v, const PlotExtent& e, const char* what) {
  if (!std::isfinite(u) || !std::isfinite(v)) throw InvalidArgument(std::string(what) + ": non-finite coordinate");
  if (!inside(u, e.u_lo, e.u_hi) || !inside(v, e.v_lo, e.v_hi)) {
    throw InvalidArgument(std::string(what) + ": coordinates outside the plotted extent");
  }
}

// Sign of the cross product (b - a) x (c - a).
int orient(TransformedPoint a, TransformedPoint b, TransformedPoint c) {
  const double x = (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u);
  return (x > 0.0) - (x < 0.0);
}

bool on_segment(TransformedPoint a, TransformedPoint b, TransformedPoint p) {
  return std::min(a.u, b.u) <= p.u && p.u <= std::max(a.u, b.u) && std::min(a.v, b.v) <= p.v &&
         p.v <= std::max(a.v, b.v);
}

}  // namespace

std::size_t region_pair(const BrushRegion& region) {
  return std::visit([](const auto& r) { return r.pair; }, region);
}

void validate_region(const BrushRegion& region, std::size_t pair_count, const PlotExtent& extent) {
  if (region_pair(region) >= pair_count) throw InvalidArgument("brush: pair index out of range");
  if (const auto* r = std::get_if<RectRegion>(&region)) {
    check_point(r->u0, r->v0, extent, "rect brush");
    check_point(r->u1, r->v1, extent, "rect brush");
    if (r->u0 > r->u1 || r->v0 > r->v1) throw InvalidArgument("rect brush: need u0 <= u1 and v0 <= v1");
    return;
  }
  const auto& lasso = std::get<LassoRegion>(region);
  if (lasso.polygon.size() < 3) throw InvalidArgument("lasso brush: need at least 3 vertices");
  for (const auto& p : lasso.polygon) check_point(p.u, p.v, extent, "lasso brush");
}

bool segment_hits_rect(TransformedPoint a, TransformedPoint b, const RectRegion& r) {
  // Liang-Barsky on the closed rectangle.
  const double du = b.u - a.u;
  const double dv = b.v - a.v;
  const double p[4] = {-du, du, -dv, dv};
  const double q[4] = {a.u - r.u0, r.u1 - a.u, a.v - r.v0, r.v1 - a.v};
  double t0 = 0.0;
  double t1 = 1.0;
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return false;
      continue;
    }
    const double t = q[i] / p[i];
    if (p[i] < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
  }
  return true;
}

bool segments_cross(TransformedPoint a, TransformedPoint b, TransformedPoint c, TransformedPoint d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

bool point_in_polygon(TransformedPoint p, const std::vector<TransformedPoint>& polygon) {
  bool in = false;
  for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
    const auto& a = polygon[i];
    const auto& b = polygon[j];
    if ((a.v > p.v) != (b.v > p.v)) {
      const double u = a.u + (p.v - a.v) * (b.u - a.u) / (b.v - a.v);
      if (p.u < u) in = !in;
    }
  }
  return in;
}

Selection brush_select(const NormalizedDataset& d, const BrushRegion& region, const TransformConfig& cfg,
                       const PlotExtent& extent) {
  validate_region(region, d.pairs(), extent);
  const CurveSampler sampler(cfg);
  return {region, kernels::omp::select(d.data, region, sampler)};
}

}  // namespace aupc
