#include "aupc/core/curve.hpp"

#include <algorithm>
#include <cmath>

#include "aupc/core/scaling_spline.hpp"

namespace aupc {

namespace {

struct Coefficients {
  double left;
  double right;
};

// Limits and axis anchors use their exact closed forms.
Coefficients coefficients_at(double u) {
  if (u == -0.5) return {1.0, -1.0};
  if (u == 1.5) return {-1.0, 1.0};
  if (u == 0.5) return {2.0 / kPi, 2.0 / kPi};
  if (u == 0.0) return {1.0, 0.0};
  if (u == 1.0) return {0.0, 1.0};
  const double theta = theta_for_u(u);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double k = 2.0 * (u - 0.5) / (s + c);
  return {-s * k, c * k};
}

}  // namespace

CurveSampler::CurveSampler(const TransformConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const double du = 2.0 * cfg_.delta_theta / kPi;
  constexpr double kAnchors[] = {-0.5, 0.0, 0.5, 1.0, 1.5};
  const double snap = 1e-9 * du;

  std::vector<double> grid(std::begin(kAnchors), std::end(kAnchors));
  auto near_anchor = [&](double u) {
    return std::any_of(std::begin(kAnchors), std::end(kAnchors),
                       [&](double a) { return std::abs(u - a) <= snap; });
  };
  // theta = pi/2 - m*dtheta on the left branch, -pi/2 + m*dtheta on the right.
  for (long m = 1;; ++m) {
    const double u = -static_cast<double>(m) * du;
    if (u <= -0.5) break;
    if (!near_anchor(u)) grid.push_back(u);
  }
  for (long m = 1;; ++m) {
    const double u = static_cast<double>(m) * du;
    if (u >= 1.5) break;
    if (!near_anchor(u)) grid.push_back(u);
  }
  std::sort(grid.begin(), grid.end());

  const ScalingSpline& spline = default_scaling_spline();
  u_ = std::move(grid);
  left_.resize(u_.size());
  right_.resize(u_.size());
  for (std::size_t i = 0; i < u_.size(); ++i) {
    Coefficients k = coefficients_at(u_[i]);
    if (cfg_.scaling_enabled) {
      const double s = spline(u_[i]);
      k.left *= s;
      k.right *= s;
    }
    left_[i] = k.left;
    right_[i] = k.right;
  }
  inner_begin_ = static_cast<std::size_t>(std::find(u_.begin(), u_.end(), 0.0) - u_.begin());
  inner_end_ = static_cast<std::size_t>(std::find(u_.begin(), u_.end(), 1.0) - u_.begin()) + 1;
}

TransformedCurve CurveSampler::curve(CartesianPoint2 p, std::size_t record, std::size_t pair) const {
  TransformedCurve out;
  out.record = record;
  out.pair = pair;
  out.samples.reserve(u_.size());
  for (std::size_t i = 0; i < u_.size(); ++i) out.samples.push_back({u_[i], v(i, p)});
  return out;
}

void CurveSampler::evaluate(CartesianPoint2 p, std::span<double> out) const {
  const std::size_t n = std::min(out.size(), u_.size());
  for (std::size_t i = 0; i < n; ++i) out[i] = p.p1 * left_[i] + p.p2 * right_[i];
}

TransformedCurve transform_pc_line(CartesianPoint2 p, const TransformConfig& cfg) {
  if (!std::isfinite(p.p1) || !std::isfinite(p.p2)) {
    throw InvalidArgument("curve source point must be finite");
  }
  return CurveSampler(cfg).curve(p);
}

double curve_v_at(CartesianPoint2 p, double u, const TransformConfig& cfg) {
  if (!(u >= -0.5 && u <= 1.5)) throw InvalidArgument("u must lie in [-0.5, 1.5]");
  const Coefficients k = coefficients_at(u);
  const double v = p.p1 * k.left + p.p2 * k.right;
  return cfg.scaling_enabled ? v * default_scaling_spline()(u) : v;
}

}  // namespace aupc
