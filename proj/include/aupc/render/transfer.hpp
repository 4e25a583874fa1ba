#pragma once

#include <vector>

#include "aupc/render/density.hpp"
#include "aupc/render/image.hpp"

namespace aupc {

struct ColorStop {
  double position = 0.0;
  Rgb color;
  bool operator==(const ColorStop&) const = default;
};

struct OpacityPoint {
  double position = 0.0;
  double alpha = 0.0;
  bool operator==(const OpacityPoint&) const = default;
};

enum class Normalization { kLinear, kLog };

// Piecewise linear color and opacity maps over normalized density in [0, 1].
struct TransferFunction {
  std::vector<ColorStop> colors;
  std::vector<OpacityPoint> opacity;
  Normalization mode = Normalization::kLinear;

  // Throws InvalidArgument unless both lists have strictly increasing
  // positions starting at 0 and ending at 1, with channels in [0, 1].
  void validate() const;

  Rgb color_at(double t) const;
  double alpha_at(double t) const;
  // Premultiplied color of normalized density t.
  Rgba map(double t) const;

  bool operator==(const TransferFunction&) const = default;
};

// Blue to white with alpha 0 up to 0.15, then linear to 1; log normalization.
TransferFunction default_transfer_function();

// density / max, or log(1 + density) / log(1 + max); 0 when max == 0.
double normalize_density(double density, double max, Normalization mode);

// Grid-sized RGBA image of the field mapped through tf. Empty cells stay
// fully transparent whatever the opacity at 0.
LayerImage apply_transfer(const PairDensityField& field, const TransferFunction& tf);

}  // namespace aupc
