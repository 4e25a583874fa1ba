#pragma once

#include <cstddef>
#include <span>

#include "aupc/core/transform.hpp"
#include "aupc/data/dataset.hpp"
#include "aupc/render/image.hpp"
#include "aupc/render/layout.hpp"

namespace aupc {

struct StrokeStyle {
  Rgb color;
  double alpha = 1.0;
  double width = 1.0;  // px

  void validate() const;
  bool operator==(const StrokeStyle&) const = default;
};

struct CurveStyle {
  StrokeStyle regular{{0.6, 0.6, 0.65}, 0.5, 1.0};
  StrokeStyle outlier{{0.9, 0.2, 0.15}, 1.0, 1.5};
  bool draw_axes = true;
  StrokeStyle axis{{0.2, 0.2, 0.2}, 1.0, 1.0};

  void validate() const;
  bool operator==(const CurveStyle&) const = default;
};

// Canvas-sized layer with the 0 <= u <= 1 part of every listed record's
// curve in every pair. Records are drawn in the given order, outliers last in
// their own style. Within one record the coverage of all its strokes is
// combined by maximum, so a record never darkens itself where its pieces meet.
LayerImage render_curve_layer(const NormalizedDataset& d, std::span<const std::size_t> indices,
                              std::span<const std::size_t> outliers, const CanvasLayout& layout,
                              const TransformConfig& cfg, const CurveStyle& style);

// Anti-aliased coverage of a stroke of the given width along a-b at pixel
// centre (px + 0.5, py + 0.5).
double stroke_coverage(GridPoint a, GridPoint b, double width, double px, double py);

// Canvas-sized copy of a grid-sized pair layer; grids whose resolution differs
// from the canvas are resampled by nearest cell.
LayerImage place_pair_layer(const LayerImage& grid_layer, std::size_t pair, const CanvasLayout& layout);
MaskImage place_pair_mask(const MaskImage& grid_mask, std::size_t pair, const CanvasLayout& layout);

// Alpha multiplied by the mask (all premultiplied channels scale together).
LayerImage apply_mask(const LayerImage& layer, const MaskImage& mask);

// Curve layer at the bottom, then the density layers in order (ascending pair
// order by convention), each multiplied by its mask when masks are given.
// All images must have the same size and masks must be empty or one per
// density layer; otherwise DimensionMismatch.
LayerImage composite(const LayerImage& curve, std::span<const LayerImage> density,
                     std::span<const MaskImage> masks = {});

// img over an opaque background color.
LayerImage flatten(const LayerImage& img, Rgb background);

}  // namespace aupc
