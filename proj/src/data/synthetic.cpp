#include "aupc/data/synthetic.hpp"

#include <cmath>
#include <numbers>

#include "aupc/core/error.hpp"
#include "aupc/data/rng.hpp"

namespace aupc {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;
constexpr std::size_t kBaseCount = 1000;
constexpr double kSigma = 0.01;

// Segment through the point at abscissa x of the line y = tan(angle) x + b.
SegmentSpec on_line(double angle_deg, double intercept, double x, double half_length,
                    std::size_t count, int structure) {
  return {angle_deg, x, std::tan(angle_deg * kDegree) * x + intercept, half_length, count, kSigma,
          structure};
}

}  // namespace

void SyntheticSpec::validate() const {
  if (segments.empty()) throw InvalidArgument("synthetic spec has no segments");
  for (const auto& s : segments) {
    if (!(s.angle_deg > -90.0 && s.angle_deg <= 90.0)) {
      throw InvalidArgument("segment angle must lie in (-90, 90] degrees");
    }
    if (s.count < 1) throw InvalidArgument("segment count must be >= 1");
    if (!(s.sigma >= 0.0) || !std::isfinite(s.sigma)) throw InvalidArgument("sigma must be >= 0");
    if (!(s.half_length >= 0.0) || !std::isfinite(s.half_length)) {
      throw InvalidArgument("half_length must be >= 0");
    }
    if (!std::isfinite(s.center_x) || !std::isfinite(s.center_y)) {
      throw InvalidArgument("segment center must be finite");
    }
  }
}

// The layout keeps every segment clear of the other structures' line
// extensions, so a brush around one structure's indexed point does not pick
// up records of another.
SyntheticSpec default_synthetic_spec() {
  SyntheticSpec spec;
  spec.segments.push_back(on_line(-5.0, 1.0, 0.5, 0.52, kBaseCount, kMinus5));
  spec.segments.push_back(on_line(15.0, 0.57, 0.4, 0.42, 4 * kBaseCount, kDeg15));
  spec.segments.push_back(on_line(56.0, -0.6 * std::tan(56.0 * kDegree), 0.725, 0.225, kBaseCount, kDeg56));
  for (int i = 0; i < 9; ++i) {
    const double intercept = 0.22 * i / 8.0;
    spec.segments.push_back(on_line(30.0, intercept, 0.3, 0.33, kBaseCount, kDeg30));
  }
  return spec;
}

SyntheticData generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  std::vector<double> values;
  SyntheticData out;
  for (std::size_t s = 0; s < spec.segments.size(); ++s) {
    const SegmentSpec& seg = spec.segments[s];
    const double dx = std::cos(seg.angle_deg * kDegree);
    const double dy = std::sin(seg.angle_deg * kDegree);
    const std::size_t max_attempts = 1000 * seg.count + 1000;
    std::size_t attempts = 0;
    for (std::size_t accepted = 0; accepted < seg.count;) {
      if (++attempts > max_attempts) {
        throw InvalidArgument("segment " + std::to_string(s) +
                              " rarely falls inside the unit square; move it or disable clipping");
      }
      const double t = rng.uniform(-seg.half_length, seg.half_length);
      const double n = seg.sigma > 0.0 ? seg.sigma * rng.normal() : 0.0;
      const double x = seg.center_x + t * dx - n * dy;
      const double y = seg.center_y + t * dy + n * dx;
      if (spec.clip_to_unit_square && (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)) continue;
      values.push_back(x);
      values.push_back(y);
      out.structure.push_back(seg.structure);
      out.segment.push_back(s);
      ++accepted;
    }
  }
  out.data = Dataset({"x1", "x2"}, std::move(values), "synthetic seed " + std::to_string(seed));
  return out;
}

}  // namespace aupc
