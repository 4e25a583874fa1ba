#include "aupc/analysis/corner.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "aupc/core/error.hpp"
#include "aupc/kernels/corner.hpp"

namespace aupc {

void PercentileConfig::validate() const {
  if (window < 3 || window % 2 == 0) throw InvalidArgument("percentile window must be an odd integer >= 3");
  if (!(percentile >= 0.0 && percentile <= 100.0)) throw InvalidArgument("percentile must lie in [0, 100]");
}

void CornerConfig::validate() const {
  if (window < 3 || window % 2 == 0) throw InvalidArgument("corner window must be an odd integer >= 3");
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw InvalidArgument("corner threshold must lie in [0, 1]");
  if (radius < 0) throw InvalidArgument("disk radius must be >= 0");
  if (prefilter) prefilter->validate();
}

MetricImage corner_metric(const Image1& density, int window) {
  MetricImage m = kernels::omp::min_eigenvalue(density, window);
  auto& c = m.cells();
  const double max = c.empty() ? 0.0 : *std::max_element(c.begin(), c.end());
  if (max > 0.0) {
    for (double& x : c) x /= max;
  }
  return m;
}

MetricImage corner_metric(const Image1& density, const CornerConfig& cfg) {
  cfg.validate();
  if (cfg.prefilter) {
    return corner_metric(percentile_filter(density, cfg.prefilter->window, cfg.prefilter->percentile), cfg.window);
  }
  return corner_metric(density, cfg.window);
}

Image1 percentile_filter(const Image1& img, int window, double percentile) {
  PercentileConfig{window, percentile}.validate();
  const int r = window / 2;
  const int w = img.width();
  const int h = img.height();
  Image1 out(w, h);
#pragma omp parallel
  {
    std::vector<double> buf;
    buf.reserve(static_cast<std::size_t>(window) * window);
#pragma omp for schedule(static)
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        buf.clear();
        for (int yy = std::max(0, y - r); yy <= std::min(h - 1, y + r); ++yy) {
          for (int xx = std::max(0, x - r); xx <= std::min(w - 1, x + r); ++xx) buf.push_back(img(xx, yy));
        }
        const auto n = static_cast<double>(buf.size());
        const auto rank = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(percentile / 100.0 * n)));
        auto nth = buf.begin() + static_cast<std::ptrdiff_t>(rank - 1);
        std::nth_element(buf.begin(), nth, buf.end());
        out(x, y) = std::max(img(x, y), *nth);
      }
    }
  }
  return out;
}

MaskImage build_mask(const MetricImage& metric, double threshold, int radius) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw InvalidArgument("corner threshold must lie in [0, 1]");
  if (radius < 0) throw InvalidArgument("disk radius must be >= 0");
  const int w = metric.width();
  const int h = metric.height();
  MaskImage mask(w, h);
  // Disk footprint, precomputed once.
  struct Tap {
    int dx, dy;
    double value;
  };
  std::vector<Tap> disk;
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      const double d = std::hypot(dx, dy);
      const double v = radius == 0 ? (d == 0.0 ? 1.0 : 0.0) : 1.0 - d / radius;
      if (v > 0.0) disk.push_back({dx, dy, v});
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!(metric(x, y) >= threshold)) continue;
      for (const Tap& t : disk) {
        const int xx = x + t.dx;
        const int yy = y + t.dy;
        if (xx < 0 || yy < 0 || xx >= w || yy >= h) continue;
        double& m = mask(xx, yy);
        m = std::max(m, t.value);
      }
    }
  }
  return mask;
}

MaskImage corner_mask(const Image1& density, const CornerConfig& cfg) {
  return build_mask(corner_metric(density, cfg), cfg.threshold, cfg.radius);
}

}  // namespace aupc
