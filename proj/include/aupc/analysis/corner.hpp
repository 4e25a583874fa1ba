#pragma once

#include <optional>

#include "aupc/render/image.hpp"

namespace aupc {

struct PercentileConfig {
  int window = 5;
  double percentile = 50.0;

  void validate() const;
  bool operator==(const PercentileConfig&) const = default;
};

struct CornerConfig {
  int window = 5;          // odd, >= 3
  double threshold = 0.5;  // in [0, 1]
  int radius = 6;          // disk radius in px, >= 0
  std::optional<PercentileConfig> prefilter;

  void validate() const;
  bool operator==(const CornerConfig&) const = default;
};

// Minimum-eigenvalue corner response scaled so the largest value is 1; an
// all-zero response stays zero.
MetricImage corner_metric(const Image1& density, int window);
MetricImage corner_metric(const Image1& density, const CornerConfig& cfg);

// max(img, nearest-rank p-th percentile of the window around each pixel); the
// window is clipped at the image edge. Raises dim pixels to their local
// percentile so faint crossings survive the later threshold.
Image1 percentile_filter(const Image1& img, int window, double percentile);

// Disks of radius `radius` around every pixel with metric >= threshold:
// 1 at the centre, falling linearly to 0 at the radius, combined by maximum.
MaskImage build_mask(const MetricImage& metric, double threshold, int radius);

// Full corner-filter chain for one density grid: optional prefilter, metric,
// mask.
MaskImage corner_mask(const Image1& density, const CornerConfig& cfg);

}  // namespace aupc
