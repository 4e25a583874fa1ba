#include <doctest.h>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_spline.h>

#include <cmath>
#include <functional>
#include <vector>

#include "aupc/core/scaling_spline.hpp"

using namespace aupc;

namespace {

// Largest jump between neighbouring second differences on a grid of step h,
// relative to h * max|s'''| (the change expected from a C2 cubic alone).
double worst_second_difference_jump(const std::function<double(double)>& f, double h, double third_max) {
  std::vector<double> d2;
  for (double u = -0.5 + h; u <= 1.5 - h + 1e-12; u += h) d2.push_back((f(u + h) - 2.0 * f(u) + f(u - h)) / (h * h));
  double worst = 0.0;
  for (std::size_t i = 1; i < d2.size(); ++i) worst = std::max(worst, std::abs(d2[i] - d2[i - 1]) / (h * third_max));
  return worst;
}

double third_derivative_bound(const ScalingSpline& s) {
  const auto k = s.knots();
  const auto m = s.moments();
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) best = std::max(best, std::abs(m[i + 1] - m[i]) / (k[i + 1] - k[i]));
  return best;
}

}  // namespace

TEST_CASE("scaling spline interpolates the eleven control values exactly") {
  const ScalingSpline& s = default_scaling_spline();
  for (const auto& cp : ScalingSpline::control_points()) CHECK(s(cp.u) == cp.s);
  CHECK(s(0.0) == 1.0);
  CHECK(s(1.0) == 1.0);
  CHECK(s(0.5) == 0.812);
  CHECK(s(1.25) == 1.153);
}

TEST_CASE("scaling spline matches the GSL natural cubic spline") {
  const auto& cps = ScalingSpline::control_points();
  std::vector<double> x, y;
  for (const auto& cp : cps) {
    x.push_back(cp.u);
    y.push_back(cp.s);
  }
  gsl_interp_accel* acc = gsl_interp_accel_alloc();
  gsl_spline* ref = gsl_spline_alloc(gsl_interp_cspline, x.size());
  gsl_spline_init(ref, x.data(), y.data(), x.size());
  const ScalingSpline& s = default_scaling_spline();
  for (int i = 0; i <= 2000; ++i) {
    const double u = -0.5 + i * 1e-3;
    CHECK(s(u) == doctest::Approx(gsl_spline_eval(ref, u, acc)).epsilon(1e-12));
    CHECK(s.derivative(u) == doctest::Approx(gsl_spline_eval_deriv(ref, u, acc)).epsilon(1e-9).scale(1.0));
    CHECK(s.second_derivative(u) == doctest::Approx(gsl_spline_eval_deriv2(ref, u, acc)).epsilon(1e-9).scale(1.0));
  }
  gsl_spline_free(ref);
  gsl_interp_accel_free(acc);
}

TEST_CASE("scaling spline is C2 and positive") {
  const ScalingSpline& s = default_scaling_spline();
  const auto m = s.moments();
  CHECK(m.front() == 0.0);
  CHECK(m.back() == 0.0);
  const double bound = third_derivative_bound(s);
  const double worst = worst_second_difference_jump([&](double u) { return s(u); }, 1e-3, bound);
  CHECK(worst <= 10.0);
  for (int i = 0; i <= 2000; ++i) CHECK(s(-0.5 + i * 1e-3) > 0.0);

  SUBCASE("the jump check detects a curvature break") {
    // Same spline with a kink in s'' at u = 0.3.
    auto broken = [&](double u) { return s(u) + (u > 0.3 ? 0.5 * (u - 0.3) * (u - 0.3) : 0.0); };
    CHECK(worst_second_difference_jump(broken, 1e-3, bound) > 10.0);
  }
}

TEST_CASE("scaling spline is symmetric about the pair centre") {
  const ScalingSpline& s = default_scaling_spline();
  for (int i = 0; i <= 100; ++i) {
    const double u = -0.5 + i * 0.01;
    CHECK(s(u) == doctest::Approx(s(1.0 - u)).epsilon(1e-12));
  }
}

TEST_CASE("natural_spline_moments reproduces a straight line") {
  const std::vector<double> x{0.0, 0.3, 1.0, 1.7};
  const std::vector<double> y{1.0, 1.6, 3.0, 4.4};
  for (double m : natural_spline_moments(x, y)) CHECK(std::abs(m) < 1e-12);
}
