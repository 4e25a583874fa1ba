#include "aupc/render/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aupc/core/error.hpp"

namespace aupc {

namespace {

bool unit(double x) { return x >= 0.0 && x <= 1.0; }

template <typename Points>
void check_positions(const Points& pts, const char* what) {
  if (pts.size() < 2) throw InvalidArgument(std::string(what) + ": need at least two control points");
  if (pts.front().position != 0.0 || pts.back().position != 1.0) {
    throw InvalidArgument(std::string(what) + ": positions must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i].position > pts[i - 1].position)) {
      throw InvalidArgument(std::string(what) + ": positions must be strictly increasing");
    }
  }
}

// Index i with pts[i].position <= t < pts[i+1].position, clamped.
template <typename Points>
std::size_t segment(const Points& pts, double t) {
  auto it = std::upper_bound(pts.begin(), pts.end(), t,
                             [](double x, const auto& p) { return x < p.position; });
  std::size_t i = static_cast<std::size_t>(it - pts.begin());
  return std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, pts.size() - 2);
}

}  // namespace

void TransferFunction::validate() const {
  check_positions(colors, "color stops");
  check_positions(opacity, "opacity points");
  for (const auto& c : colors) {
    if (!unit(c.color.r) || !unit(c.color.g) || !unit(c.color.b)) {
      throw InvalidArgument("color stops: channels must lie in [0, 1]");
    }
  }
  for (const auto& o : opacity) {
    if (!unit(o.alpha)) throw InvalidArgument("opacity points: alpha must lie in [0, 1]");
  }
}

Rgb TransferFunction::color_at(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  const std::size_t i = segment(colors, t);
  const auto& a = colors[i];
  const auto& b = colors[i + 1];
  const double w = (t - a.position) / (b.position - a.position);
  return {a.color.r + w * (b.color.r - a.color.r), a.color.g + w * (b.color.g - a.color.g),
          a.color.b + w * (b.color.b - a.color.b)};
}

double TransferFunction::alpha_at(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  const std::size_t i = segment(opacity, t);
  const auto& a = opacity[i];
  const auto& b = opacity[i + 1];
  const double w = (t - a.position) / (b.position - a.position);
  return a.alpha + w * (b.alpha - a.alpha);
}

Rgba TransferFunction::map(double t) const {
  const Rgb c = color_at(t);
  const double a = alpha_at(t);
  return {c.r * a, c.g * a, c.b * a, a};
}

TransferFunction default_transfer_function() {
  TransferFunction tf;
  tf.colors = {{0.0, {0.05, 0.15, 0.6}}, {0.5, {0.35, 0.6, 0.95}}, {1.0, {1.0, 1.0, 1.0}}};
  tf.opacity = {{0.0, 0.0}, {0.15, 0.0}, {1.0, 1.0}};
  tf.mode = Normalization::kLog;
  return tf;
}

double normalize_density(double density, double max, Normalization mode) {
  if (!(max > 0.0)) return 0.0;
  if (mode == Normalization::kLog) return std::log1p(density) / std::log1p(max);
  return density / max;
}

LayerImage apply_transfer(const PairDensityField& field, const TransferFunction& tf) {
  tf.validate();
  const auto& g = field.grid;
  LayerImage out(g.width(), g.height());
  const double max = field.max();
  if (!(max > 0.0)) return out;
  const auto& src = g.cells();
  auto& dst = out.cells();
  for (std::size_t k = 0; k < src.size(); ++k) {
    dst[k] = src[k] > 0.0 ? tf.map(normalize_density(src[k], max, tf.mode)) : Rgba{};
  }
  return out;
}

}  // namespace aupc
