#pragma once

#include <array>
#include <span>
#include <vector>

namespace aupc {

struct ControlPoint {
  double u;
  double s;
};

// Vertical scaling factor s(u): a natural cubic spline through eleven fixed
// control points, flattening curves between the axes while leaving s = 1 on
// both axes.
class ScalingSpline {
 public:
  static constexpr std::size_t kControlCount = 11;
  static const std::array<ControlPoint, kControlCount>& control_points();

  ScalingSpline();

  double operator()(double u) const;
  double derivative(double u) const;
  double second_derivative(double u) const;

  std::span<const double> knots() const { return knots_; }
  // Second derivatives at the knots (zero at both ends).
  std::span<const double> moments() const { return moments_; }

 private:
  std::size_t segment(double u) const;

  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> moments_;
};

// Natural cubic spline moments for arbitrary strictly increasing knots.
std::vector<double> natural_spline_moments(std::span<const double> x, std::span<const double> y);

const ScalingSpline& default_scaling_spline();

}  // namespace aupc
