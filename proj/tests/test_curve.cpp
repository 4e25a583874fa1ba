#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "aupc/core/curve.hpp"
#include "aupc/core/error.hpp"
#include "aupc/core/scaling_spline.hpp"
#include "aupc/data/rng.hpp"

using namespace aupc;

namespace {

double sample_at(const TransformedCurve& c, double u) {
  for (const auto& s : c.samples) {
    if (s.u == u) return s.v;
  }
  FAIL("no sample at u = " << u);
  return 0.0;
}

// Richardson-extrapolated one-sided limit of the raw formula at u0.
double sweep_limit(CartesianPoint2 p, double u0, double side, double eps) {
  const double a = curve_v_formula(p, u0 + side * eps);
  const double b = curve_v_formula(p, u0 + side * 2.0 * eps);
  return 2.0 * a - b;
}

}  // namespace

TEST_CASE("curve of (0.3, 0.8) hits the axes and the centre limit") {
  const TransformedCurve c = transform_pc_line({0.3, 0.8}, TransformConfig{});
  CHECK(sample_at(c, 0.0) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(sample_at(c, 1.0) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(sample_at(c, 0.5) == doctest::Approx(2.0 * 1.1 / kPi).epsilon(1e-12));
  CHECK(sample_at(c, 0.5) == doctest::Approx(0.70028).epsilon(1e-5));
  CHECK(sample_at(c, -0.5) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(sample_at(c, 1.5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("curves of equal attribute values end at v = 0") {
  for (double c : {0.0, 0.25, 0.5, 1.0}) {
    const TransformedCurve curve = transform_pc_line({c, c}, TransformConfig{});
    CHECK(curve.samples.front().u == -0.5);
    CHECK(curve.samples.back().u == 1.5);
    CHECK(std::abs(curve.samples.front().v) < 1e-12);
    CHECK(std::abs(curve.samples.back().v) < 1e-12);
  }
}

TEST_CASE("samples are strictly increasing in u and include the anchors") {
  for (double dt : {kPi / 360.0, kPi / 90.0, 0.05}) {
    TransformConfig cfg;
    cfg.delta_theta = dt;
    const CurveSampler s(cfg);
    const auto u = s.u();
    CHECK(u.front() == -0.5);
    CHECK(u.back() == 1.5);
    for (std::size_t i = 1; i < u.size(); ++i) CHECK(u[i] > u[i - 1]);
    for (double a : {0.0, 0.5, 1.0}) CHECK(std::find(u.begin(), u.end(), a) != u.end());
    CHECK(u[s.inner_begin()] == 0.0);
    CHECK(u[s.inner_end() - 1] == 1.0);
  }
}

TEST_CASE("sampler default spacing is 1/180 in u") {
  const CurveSampler s(TransformConfig{});
  // 89 interior samples per quarter turn on each side plus five anchors.
  CHECK(s.size() == 89 + 267 + 5);
  CHECK(s.u()[1] - s.u()[0] == doctest::Approx(1.0 / 180.0).epsilon(1e-9));
}

TEST_CASE("sampled v agrees with the formula away from the limits") {
  const CurveSampler s(TransformConfig{});
  const CartesianPoint2 p{0.17, 0.64};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double u = s.u()[i];
    if (u == -0.5 || u == 0.5 || u == 1.5) continue;
    CHECK(s.v(i, p) == doctest::Approx(curve_v_formula(p, u)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("scaling multiplies every sample by the spline") {
  TransformConfig on;
  on.scaling_enabled = true;
  const CurveSampler plain(TransformConfig{});
  const CurveSampler scaled(on);
  const CartesianPoint2 p{0.4, 0.9};
  const ScalingSpline& spline = default_scaling_spline();
  REQUIRE(plain.size() == scaled.size());
  for (std::size_t i = 0; i < plain.size(); ++i) {
    CHECK(scaled.v(i, p) == doctest::Approx(plain.v(i, p) * spline(plain.u()[i])).epsilon(1e-14).scale(1.0));
  }
  CHECK(curve_v_at(p, 0.5, on) == doctest::Approx(2.0 * 1.3 / kPi * 0.812).epsilon(1e-12));
}

TEST_CASE("mirror symmetry: curve(p2, p1) at u equals curve(p1, p2) at 1 - u") {
  Rng rng(11);
  for (bool scaled : {false, true}) {
    TransformConfig cfg;
    cfg.scaling_enabled = scaled;
    const CurveSampler s(cfg);
    for (int k = 0; k < 100; ++k) {
      const CartesianPoint2 p{rng.uniform(), rng.uniform()};
      const CartesianPoint2 q{p.p2, p.p1};
      double worst = 0.0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        const double u = s.u()[i];
        worst = std::max(worst, std::abs(s.v(i, q) - curve_v_at(p, 1.0 - u, cfg)));
      }
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("stitch at u = 0 is continuous and C1 up to the sampling step") {
  auto slope_gap = [](double dt, CartesianPoint2 p) {
    TransformConfig cfg;
    cfg.delta_theta = dt;
    const CurveSampler s(cfg);
    const std::size_t i = s.inner_begin();
    const auto u = s.u();
    CHECK(s.v(i, p) == p.p1);
    const double left = (s.v(i, p) - s.v(i - 1, p)) / (u[i] - u[i - 1]);
    const double right = (s.v(i + 1, p) - s.v(i, p)) / (u[i + 1] - u[i]);
    return std::abs(left - right);
  };
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const CartesianPoint2 p{rng.uniform(), rng.uniform()};
    // One-sided values from theta -> pi/2 and theta -> -pi/2.
    CHECK(curve_v_formula(p, -1e-9) == doctest::Approx(p.p1).epsilon(1e-7).scale(1.0));
    CHECK(curve_v_formula(p, 1e-9) == doctest::Approx(p.p1).epsilon(1e-7).scale(1.0));
    const double coarse = slope_gap(kPi / 90.0, p);
    const double fine = slope_gap(kPi / 360.0, p);
    const double finer = slope_gap(kPi / 1440.0, p);
    // Gap shrinks in proportion to the step.
    CHECK(fine <= 0.3 * coarse + 1e-9);
    CHECK(finer <= 0.3 * fine + 1e-9);
    CHECK(fine <= 10.0 * (kPi / 360.0) * (1.0 + std::abs(p.p1) + std::abs(p.p2)));
  }
}

TEST_CASE("limit closed forms agree with an epsilon sweep") {
  // Extrapolated one-sided values at eps = 1e-3, 1e-4, 1e-5 must converge to the closed form.
  auto check_sweep = [](CartesianPoint2 p, double u0, double side, double expected) {
    const double r1 = sweep_limit(p, u0, side, 1e-3);
    const double r2 = sweep_limit(p, u0, side, 1e-4);
    const double r3 = sweep_limit(p, u0, side, 1e-5);
    CHECK(std::abs(r3 - r2) <= std::max(std::abs(r2 - r1), 1e-10));
    CHECK(std::abs(r3 - expected) <= 1e-6);
  };
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const CartesianPoint2 p{rng.uniform(), rng.uniform()};
    const double centre = 2.0 * (p.p1 + p.p2) / kPi;
    check_sweep(p, -0.5, 1.0, p.p1 - p.p2);
    check_sweep(p, 1.5, -1.0, p.p2 - p.p1);
    check_sweep(p, 0.5, -1.0, centre);
    check_sweep(p, 0.5, 1.0, centre);
    CHECK(limit_v_closed_form(p, LimitTarget::kCenter) == doctest::Approx(centre).epsilon(1e-15));
  }
  const double c = 0.37;
  check_sweep({c, c}, 0.5, 1.0, 4.0 * c / kPi);
  check_sweep({c, c}, -0.5, 1.0, 0.0);
}

TEST_CASE("curve_v_at rejects u outside the plot") {
  CHECK_THROWS_AS(curve_v_at({0.1, 0.2}, 1.6, TransformConfig{}), InvalidArgument);
  CHECK_THROWS_AS(curve_v_at({0.1, 0.2}, std::nan(""), TransformConfig{}), InvalidArgument);
  CHECK_THROWS_AS(transform_pc_line({INFINITY, 0.2}, TransformConfig{}), InvalidArgument);
}
