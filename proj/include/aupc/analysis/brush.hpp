#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "aupc/core/transform.hpp"
#include "aupc/data/dataset.hpp"

namespace aupc {

struct RectRegion {
  std::size_t pair = 0;
  double u0 = 0.0, u1 = 0.0;
  double v0 = 0.0, v1 = 0.0;
  bool operator==(const RectRegion&) const = default;
};

struct LassoRegion {
  std::size_t pair = 0;
  std::vector<TransformedPoint> polygon;  // closed implicitly
  bool operator==(const LassoRegion&) const = default;
};

using BrushRegion = std::variant<RectRegion, LassoRegion>;

std::size_t region_pair(const BrushRegion& region);

// Plotted extent of one pair.
struct PlotExtent {
  double u_lo = -0.5;
  double u_hi = 1.5;
  double v_lo = -1.0;
  double v_hi = 1.5;
};

// Throws InvalidArgument for inverted or non-finite rects, lassos with fewer
// than three vertices, coordinates outside the extent, or a pair that does
// not exist (pair_count given).
void validate_region(const BrushRegion& region, std::size_t pair_count, const PlotExtent& extent = {});

struct Selection {
  BrushRegion region;
  std::vector<std::size_t> record_ids;  // ascending
  bool operator==(const Selection&) const = default;
};

// Records whose full-range curve (-0.5 <= u <= 1.5) in the region's pair
// touches the region (boundary included).
Selection brush_select(const NormalizedDataset& d, const BrushRegion& region, const TransformConfig& cfg,
                       const PlotExtent& extent = {});

// Segment tests shared by the kernels.
bool segment_hits_rect(TransformedPoint a, TransformedPoint b, const RectRegion& r);
bool segments_cross(TransformedPoint a, TransformedPoint b, TransformedPoint c, TransformedPoint d);
bool point_in_polygon(TransformedPoint p, const std::vector<TransformedPoint>& polygon);

}  // namespace aupc
