#include "aupc/render/layers.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "aupc/core/curve.hpp"
#include "aupc/core/error.hpp"

namespace aupc {

namespace {

bool unit(double x) { return x >= 0.0 && x <= 1.0; }

// Per-record coverage, max-combined, with the list of touched pixels so that
// clearing is proportional to the stroke area.
class CoverageScratch {
 public:
  CoverageScratch(int width, int height) : cov_(width, height) {}

  void stroke(GridPoint a, GridPoint b, double width) {
    const double reach = 0.5 * width + 1.0;
    const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - reach)));
    const int x1 = std::min(cov_.width() - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + reach)));
    const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - reach)));
    const int y1 = std::min(cov_.height() - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + reach)));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        const double c = stroke_coverage(a, b, width, x, y);
        if (c <= 0.0) continue;
        double& cell = cov_(x, y);
        if (cell == 0.0) touched_.push_back(static_cast<std::size_t>(y) * cov_.width() + x);
        cell = std::max(cell, c);
      }
    }
  }

  void flush(LayerImage& layer, const StrokeStyle& style) {
    auto& cov = cov_.cells();
    auto& dst = layer.cells();
    for (std::size_t k : touched_) {
      const double a = style.alpha * cov[k];
      dst[k] = over({style.color.r * a, style.color.g * a, style.color.b * a, a}, dst[k]);
      cov[k] = 0.0;
    }
    touched_.clear();
  }

 private:
  Grid<double> cov_;
  std::vector<std::size_t> touched_;
};

void draw_record(CoverageScratch& scratch, const Dataset& d, std::size_t row, const CanvasLayout& layout,
                 const CurveSampler& sampler, const std::vector<std::vector<double>>& xs, double width) {
  const std::size_t begin = sampler.inner_begin();
  const std::size_t end = sampler.inner_end();
  for (std::size_t pair = 0; pair + 1 < d.columns(); ++pair) {
    const CartesianPoint2 p{d.at(row, pair), d.at(row, pair + 1)};
    const auto& x = xs[pair];
    GridPoint prev{x[begin], layout.canvas_y(sampler.v(begin, p))};
    for (std::size_t i = begin + 1; i < end; ++i) {
      const GridPoint next{x[i], layout.canvas_y(sampler.v(i, p))};
      scratch.stroke(prev, next, width);
      prev = next;
    }
  }
}

void check_same(const auto& a, const auto& b, const char* what) {
  if (a.width() != b.width() || a.height() != b.height()) throw DimensionMismatch(what);
}

}  // namespace

void StrokeStyle::validate() const {
  if (!unit(color.r) || !unit(color.g) || !unit(color.b)) throw InvalidArgument("stroke color must lie in [0, 1]");
  if (!unit(alpha)) throw InvalidArgument("stroke alpha must lie in [0, 1]");
  if (!(width > 0.0) || !std::isfinite(width)) throw InvalidArgument("stroke width must be positive");
}

void CurveStyle::validate() const {
  regular.validate();
  outlier.validate();
  axis.validate();
}

double stroke_coverage(GridPoint a, GridPoint b, double width, double px, double py) {
  const double cx = px + 0.5;
  const double cy = py + 0.5;
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((cx - a.x) * dx + (cy - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dist = std::hypot(cx - (a.x + t * dx), cy - (a.y + t * dy));
  const double c = std::clamp(0.5 * width + 0.5 - dist, 0.0, 1.0);
  return width < 1.0 ? c * width : c;
}

LayerImage render_curve_layer(const NormalizedDataset& d, std::span<const std::size_t> indices,
                              std::span<const std::size_t> outliers, const CanvasLayout& layout,
                              const TransformConfig& cfg, const CurveStyle& style) {
  layout.validate();
  style.validate();
  for (std::size_t r : indices) {
    if (r >= d.rows()) throw InvalidArgument("record index out of range");
  }
  for (std::size_t r : outliers) {
    if (r >= d.rows()) throw InvalidArgument("outlier index out of range");
  }
  LayerImage layer(layout.canvas_width(), layout.canvas_height());
  CoverageScratch scratch(layer.width(), layer.height());

  if (style.draw_axes && d.columns() >= 2) {
    for (std::size_t axis = 0; axis < d.columns(); ++axis) {
      const double x = axis + 1 < d.columns() ? layout.canvas_x(axis, 0.0) : layout.canvas_x(axis - 1, 1.0);
      scratch.stroke({x, layout.canvas_y(1.0)}, {x, layout.canvas_y(0.0)}, style.axis.width);
      scratch.flush(layer, style.axis);
    }
  }
  if (d.columns() < 2 || (indices.empty() && outliers.empty())) return layer;

  const CurveSampler sampler(cfg);
  std::vector<std::vector<double>> xs(d.pairs(), std::vector<double>(sampler.size()));
  for (std::size_t pair = 0; pair < d.pairs(); ++pair) {
    for (std::size_t i = 0; i < sampler.size(); ++i) xs[pair][i] = layout.canvas_x(pair, sampler.u()[i]);
  }
  for (std::size_t r : indices) {
    draw_record(scratch, d.data, r, layout, sampler, xs, style.regular.width);
    scratch.flush(layer, style.regular);
  }
  for (std::size_t r : outliers) {
    draw_record(scratch, d.data, r, layout, sampler, xs, style.outlier.width);
    scratch.flush(layer, style.outlier);
  }
  return layer;
}

namespace {

template <typename T>
Grid<T> place(const Grid<T>& src, std::size_t pair, const CanvasLayout& layout) {
  layout.validate();
  if (src.width() != layout.columns() || src.height() != layout.rows()) {
    throw DimensionMismatch("pair layer does not match the layout grid size");
  }
  if (pair >= layout.pairs) throw InvalidArgument("pair index out of range");
  Grid<T> out(layout.canvas_width(), layout.canvas_height());
  const int span = 2 * layout.pair_width;
  const int x_origin = layout.pair_origin_x(pair);
  for (int y = 0; y < layout.height; ++y) {
    const int gy = std::min(src.height() - 1, static_cast<int>((y + 0.5) * src.height() / layout.height));
    for (int x = 0; x < span; ++x) {
      const int gx = std::min(src.width() - 1, static_cast<int>((x + 0.5) * src.width() / span));
      out(x_origin + x, layout.margin + y) = src(gx, gy);
    }
  }
  return out;
}

}  // namespace

LayerImage place_pair_layer(const LayerImage& grid_layer, std::size_t pair, const CanvasLayout& layout) {
  return place(grid_layer, pair, layout);
}

MaskImage place_pair_mask(const MaskImage& grid_mask, std::size_t pair, const CanvasLayout& layout) {
  return place(grid_mask, pair, layout);
}

LayerImage apply_mask(const LayerImage& layer, const MaskImage& mask) {
  check_same(layer, mask, "mask size differs from layer size");
  LayerImage out = layer;
  auto& px = out.cells();
  const auto& m = mask.cells();
  for (std::size_t k = 0; k < px.size(); ++k) {
    const double s = std::clamp(m[k], 0.0, 1.0);
    px[k] = {px[k].r * s, px[k].g * s, px[k].b * s, px[k].a * s};
  }
  return out;
}

LayerImage composite(const LayerImage& curve, std::span<const LayerImage> density,
                     std::span<const MaskImage> masks) {
  if (!masks.empty() && masks.size() != density.size()) {
    throw DimensionMismatch("need one mask per density layer");
  }
  LayerImage out = curve;
  auto& dst = out.cells();
  for (std::size_t i = 0; i < density.size(); ++i) {
    check_same(curve, density[i], "density layer size differs from curve layer size");
    const auto& src = density[i].cells();
    if (masks.empty()) {
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = over(src[k], dst[k]);
    } else {
      check_same(curve, masks[i], "mask size differs from curve layer size");
      const auto& m = masks[i].cells();
      for (std::size_t k = 0; k < dst.size(); ++k) {
        const double s = std::clamp(m[k], 0.0, 1.0);
        dst[k] = over({src[k].r * s, src[k].g * s, src[k].b * s, src[k].a * s}, dst[k]);
      }
    }
  }
  return out;
}

LayerImage flatten(const LayerImage& img, Rgb background) {
  LayerImage out = img;
  for (auto& p : out.cells()) p = over(p, {background.r, background.g, background.b, 1.0});
  return out;
}

}  // namespace aupc
