#include "aupc/core/scaling_spline.hpp"

#include <algorithm>

#include "aupc/core/error.hpp"

namespace aupc {

const std::array<ControlPoint, ScalingSpline::kControlCount>& ScalingSpline::control_points() {
  static const std::array<ControlPoint, kControlCount> points{{
      {-0.5, 1.306},
      {-0.25, 1.153},
      {0.0, 1.0},
      {0.1, 0.9312},
      {0.25, 0.8555},
      {0.5, 0.812},
      {0.75, 0.8555},
      {0.9, 0.9312},
      {1.0, 1.0},
      {1.25, 1.153},
      {1.5, 1.306},
  }};
  return points;
}

std::vector<double> natural_spline_moments(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw InvalidArgument("spline needs matching knots and values (>= 2)");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(x[i] > x[i - 1])) throw InvalidArgument("spline knots must be strictly increasing");
  }
  std::vector<double> m(n, 0.0);
  if (n == 2) return m;

  // Tridiagonal system for interior moments, solved by forward elimination.
  const std::size_t k = n - 2;
  std::vector<double> diag(k), upper(k), rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double h0 = x[i + 1] - x[i];
    const double h1 = x[i + 2] - x[i + 1];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((y[i + 2] - y[i + 1]) / h1 - (y[i + 1] - y[i]) / h0);
  }
  for (std::size_t i = 1; i < k; ++i) {
    const double lower = x[i + 1] - x[i];
    const double w = lower / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m[k] = rhs[k - 1] / diag[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) {
    m[i + 1] = (rhs[i] - upper[i] * m[i + 2]) / diag[i];
  }
  return m;
}

ScalingSpline::ScalingSpline() {
  for (const auto& cp : control_points()) {
    knots_.push_back(cp.u);
    values_.push_back(cp.s);
  }
  moments_ = natural_spline_moments(knots_, values_);
}

std::size_t ScalingSpline::segment(double u) const {
  auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
  std::size_t i = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
  return std::min(i, knots_.size() - 2);
}

double ScalingSpline::operator()(double u) const {
  const std::size_t i = segment(u);
  const double h = knots_[i + 1] - knots_[i];
  const double a = (knots_[i + 1] - u) / h;
  const double b = (u - knots_[i]) / h;
  return a * values_[i] + b * values_[i + 1] +
         ((a * a * a - a) * moments_[i] + (b * b * b - b) * moments_[i + 1]) * h * h / 6.0;
}

double ScalingSpline::derivative(double u) const {
  const std::size_t i = segment(u);
  const double h = knots_[i + 1] - knots_[i];
  const double a = (knots_[i + 1] - u) / h;
  const double b = (u - knots_[i]) / h;
  return (values_[i + 1] - values_[i]) / h -
         (3.0 * a * a - 1.0) * h * moments_[i] / 6.0 +
         (3.0 * b * b - 1.0) * h * moments_[i + 1] / 6.0;
}

double ScalingSpline::second_derivative(double u) const {
  const std::size_t i = segment(u);
  const double h = knots_[i + 1] - knots_[i];
  const double a = (knots_[i + 1] - u) / h;
  const double b = (u - knots_[i]) / h;
  return a * moments_[i] + b * moments_[i + 1];
}

const ScalingSpline& default_scaling_spline() {
  static const ScalingSpline spline;
  return spline;
}

}  // namespace aupc
