#include <doctest.h>

#include <cmath>
#include <limits>
#include <variant>

#include "aupc/core/error.hpp"
#include "aupc/core/transform.hpp"
#include "aupc/data/rng.hpp"

using namespace aupc;

namespace {

const TransformConfig kCfg{};

}  // namespace

TEST_CASE("line_from_slope_intercept rearranges x2 = a x1 + b") {
  auto check = [](double a, double b, double c1, double c2, double c3) {
    const LineCoords l = line_from_slope_intercept(a, b);
    CHECK(l.c1() == c1);
    CHECK(l.c2() == c2);
    CHECK(l.c3() == c3);
  };
  check(-0.5, 0.0, -0.5, -1.0, 0.0);
  check(0.0, 0.3, 0.0, -1.0, 0.3);
  check(1.0, 0.2, 1.0, -1.0, 0.2);
  CHECK_THROWS_AS(line_from_slope_intercept(std::nan(""), 0.0), InvalidArgument);
  CHECK_THROWS_AS(line_from_slope_intercept(1.0, INFINITY), InvalidArgument);
}

TEST_CASE("LineCoords rejects c1 = c2 = 0") {
  CHECK_THROWS_AS(LineCoords(0.0, 0.0, 1.0), InvalidArgument);
  CHECK_NOTHROW(LineCoords(0.0, 1.0, 0.0));
}

TEST_CASE("dual_point_traditional") {
  SUBCASE("slope -0.5 through origin sits at (2/3, 0)") {
    const auto p = dual_point_traditional(line_from_slope_intercept(-0.5, 0.0));
    CHECK(std::abs(p.x() - 2.0 / 3.0) < 1e-12);
    CHECK(std::abs(p.y()) < 1e-12);
  }
  SUBCASE("slope 0.5 through origin sits at (2, 0)") {
    const auto p = dual_point_traditional(line_from_slope_intercept(0.5, 0.0));
    CHECK(std::abs(p.x() - 2.0) < 1e-12);
    CHECK(std::abs(p.y()) < 1e-12);
  }
  SUBCASE("vertical line x1 = q maps to the left axis") {
    const auto p = dual_point_traditional(LineCoords(1.0, 0.0, -0.3));
    CHECK(p.hx == 0.0);
    CHECK(p.hy == doctest::Approx(0.3));
    CHECK(p.hw == 1.0);
  }
  SUBCASE("slope one is at infinity") {
    const auto p = dual_point_traditional(line_from_slope_intercept(1.0, 0.2));
    CHECK(p.at_infinity());
  }
}

TEST_CASE("orientation") {
  CHECK(orientation(LineCoords(1.0, 0.0, -0.3)).radians() == doctest::Approx(kHalfPi));
  CHECK(orientation(LineCoords(1.0, -1.0, 0.0)).radians() == doctest::Approx(kQuarterPi));
  CHECK(orientation(LineCoords(0.5, -1.0, 0.0)).radians() == doctest::Approx(0.4636476090008061).epsilon(1e-12));
  CHECK(Angle(-kHalfPi).radians() == kHalfPi);
  CHECK_THROWS_AS(Angle(2.0), InvalidArgument);
}

TEST_CASE("horizontal_u") {
  CHECK(horizontal_u(Angle(0.0)).u == 1.0);
  CHECK(horizontal_u(Angle(kHalfPi)).u == 0.0);
  CHECK(horizontal_u(Angle(kQuarterPi)).twin);
  CHECK(horizontal_u(Angle(kQuarterPi + 5e-13)).twin);
  CHECK_FALSE(horizontal_u(Angle(kQuarterPi + 1e-9)).twin);
  CHECK(horizontal_u(Angle(kPi / 12.0)).u == doctest::Approx(7.0 / 6.0).epsilon(1e-14));
  CHECK(horizontal_u(Angle(-kHalfPi + 1e-9)).u == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("theta_for_u inverts horizontal_u on both branches") {
  for (double u : {-0.4, -0.1, 0.0, 0.2, 0.7, 1.2, 1.45}) {
    CHECK(horizontal_u(Angle(theta_for_u(u))).u == doctest::Approx(u).epsilon(1e-14));
  }
}

TEST_CASE("vertical_v") {
  CHECK(vertical_v(LineCoords(0.0, 1.0, -0.4), 1.0) == doctest::Approx(0.4));
  CHECK(vertical_v(LineCoords(1.0, 0.0, -0.35), 0.0) == doctest::Approx(0.35));
  const LineCoords l = line_from_slope_intercept(-0.5, 0.4);
  const double u = 0.70483;
  // Independent route through the traditional indexed point.
  const auto t = dual_point_traditional(l);
  const double expected = (u - 0.5) * t.y() / (t.x() - 0.5);
  CHECK(vertical_v(l, u) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(vertical_v(l, u) == doctest::Approx(0.32773).epsilon(1e-4));

  CHECK_THROWS_AS(vertical_v(l, 0.5), LimitCaseError);
  CHECK_THROWS_AS(vertical_v(l, -0.5), LimitCaseError);
  CHECK_THROWS_AS(vertical_v(l, 1.5), LimitCaseError);
  CHECK_THROWS_AS(vertical_v(LineCoords(1.0, 1.0, 0.2), 0.3), LimitCaseError);
}

TEST_CASE("limit_v_at on the three excluded locations") {
  for (double c : {0.0, 0.25, 0.6, 1.0}) {
    const CartesianPoint2 p{c, c};
    CHECK(limit_v_at(p, LimitTarget::kCenter, kCfg) == doctest::Approx(4.0 * c / kPi).epsilon(1e-9));
    CHECK(std::abs(limit_v_at(p, LimitTarget::kLeftBound, kCfg)) < 1e-9);
    CHECK(std::abs(limit_v_at(p, LimitTarget::kRightBound, kCfg)) < 1e-9);
  }
  const CartesianPoint2 p{0.2, 0.7};
  CHECK(limit_v_at(p, LimitTarget::kLeftBound, kCfg) == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(limit_v_at(p, LimitTarget::kRightBound, kCfg) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("limit_v_at reports non-convergence") {
  // One-sided values at u = 0.5 agree for every finite p, so only overflow trips the check.
  const double big = 0.45 * std::numeric_limits<double>::max();
  CHECK_THROWS_AS(limit_v_at({big, big}, LimitTarget::kCenter, kCfg), NumericalLimitError);
  CHECK_THROWS_AS(limit_v_at({big, -big}, LimitTarget::kLeftBound, kCfg), NumericalLimitError);
}

TEST_CASE("transform_indexed_point") {
  SUBCASE("slope -0.5 through the origin") {
    const auto r = transform_indexed_point(line_from_slope_intercept(-0.5, 0.0), kCfg);
    const auto& p = std::get<TransformedPoint>(r);
    CHECK(p.u == doctest::Approx(0.70483).epsilon(1e-5));
    CHECK(std::abs(p.v) < 1e-15);
  }
  SUBCASE("slope one gives the twin") {
    const auto r = transform_indexed_point(line_from_slope_intercept(1.0, 0.0), kCfg);
    const auto& t = std::get<TwinPoint>(r);
    CHECK(t.left.u == -0.5);
    CHECK(t.right.u == 1.5);
    CHECK(std::abs(t.left.v) < 1e-9);
    CHECK(std::abs(t.right.v) < 1e-9);
  }
  SUBCASE("slope one with intercept b gives v = -b / +b") {
    const auto t = std::get<TwinPoint>(transform_indexed_point(line_from_slope_intercept(1.0, 0.3), kCfg));
    CHECK(t.left.v == doctest::Approx(-0.3).epsilon(1e-9));
    CHECK(t.right.v == doctest::Approx(0.3).epsilon(1e-9));
  }
  SUBCASE("vertical line anchors to the left axis") {
    const auto& p = std::get<TransformedPoint>(transform_indexed_point(LineCoords(1.0, 0.0, -0.42), kCfg));
    CHECK(p.u == 0.0);
    CHECK(p.v == doctest::Approx(0.42));
  }
  SUBCASE("slope -1 lands on the pair centre") {
    const auto& p = std::get<TransformedPoint>(transform_indexed_point(line_from_slope_intercept(-1.0, 0.8), kCfg));
    CHECK(p.u == 0.5);
    // Every point on x2 = 0.8 - x1 has p1 + p2 = 0.8.
    CHECK(p.v == doctest::Approx(2.0 * 0.8 / kPi).epsilon(1e-9));
  }
  SUBCASE("scaling multiplies by s(u)") {
    TransformConfig scaled;
    scaled.scaling_enabled = true;
    const LineCoords l = line_from_slope_intercept(0.0, 0.5);
    const auto& a = std::get<TransformedPoint>(transform_indexed_point(l, kCfg));
    const auto& b = std::get<TransformedPoint>(transform_indexed_point(l, scaled));
    CHECK(a.u == 1.0);
    CHECK(b.v == doctest::Approx(a.v));  // s(1) = 1
  }
}

TEST_CASE("property: homogeneous invariance") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const LineCoords l(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    const double lambda = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.01, 100.0);
    const auto a = transform_indexed_point(l, kCfg);
    const auto b = transform_indexed_point(l.scaled(lambda), kCfg);
    REQUIRE(a.index() == b.index());
    if (const auto* pa = std::get_if<TransformedPoint>(&a)) {
      const auto& pb = std::get<TransformedPoint>(b);
      CHECK(std::abs(pa->u - pb.u) < 1e-12);
      CHECK(std::abs(pa->v - pb.v) < 1e-12 * std::max(1.0, std::abs(pa->v)));
    }
  }
}

TEST_CASE("property: angle linearity within each branch") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const double t1 = rng.uniform(kQuarterPi + 1e-6, kHalfPi);
    const double t2 = rng.uniform(kQuarterPi + 1e-6, kHalfPi);
    const double du = horizontal_u(Angle(t2)).u - horizontal_u(Angle(t1)).u;
    CHECK(std::abs(du - 2.0 / kPi * (t2 - t1)) < 1e-12);
    const double s1 = rng.uniform(-kHalfPi + 1e-6, kQuarterPi - 1e-6);
    const double s2 = rng.uniform(-kHalfPi + 1e-6, kQuarterPi - 1e-6);
    const double dv = horizontal_u(Angle(s2)).u - horizontal_u(Angle(s1)).u;
    CHECK(std::abs(dv - 2.0 / kPi * (s2 - s1)) < 1e-12);
  }
}

TEST_CASE("property: duality round trip") {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(-5, 5);
    const double b = rng.uniform(-5, 5);
    if (std::abs(1.0 - a) < 1e-3) continue;
    const auto p = dual_point_traditional(line_from_slope_intercept(a, b));
    CHECK(std::abs(p.x() - 1.0 / (1.0 - a)) < 1e-12 * std::max(1.0, std::abs(1.0 / (1.0 - a))));
    CHECK(std::abs(p.y() - b / (1.0 - a)) < 1e-12 * std::max(1.0, std::abs(b / (1.0 - a))));
  }
}

TEST_CASE("property: vertical transform agrees with the traditional indexed point") {
  Rng rng(14);
  for (int i = 0; i < 1000; ++i) {
    const LineCoords l(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    if (std::abs(l.c1() - l.c2()) < 1e-3 || std::abs(l.c1() + l.c2()) < 1e-3) continue;
    const double u = rng.uniform(-0.49, 1.49);
    if (std::abs(u - 0.5) < 1e-3) continue;
    const auto t = dual_point_traditional(l);
    const double expected = (u - 0.5) * t.y() / (t.x() - 0.5);
    CHECK(std::abs(vertical_v(l, u) - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("property: limit symmetry at the pair centre") {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const CartesianPoint2 p{rng.uniform(), rng.uniform()};
    const double v = limit_v_at(p, LimitTarget::kCenter, kCfg);
    CHECK(std::abs(v - 2.0 * (p.p1 + p.p2) / kPi) < 1e-6);
    CHECK(v == doctest::Approx(limit_v_closed_form(p, LimitTarget::kCenter)).epsilon(1e-6));
  }
}

TEST_CASE("TransformConfig validation") {
  TransformConfig c;
  CHECK_NOTHROW(c.validate());
  c.epsilon = 0.1;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = {};
  c.delta_theta = kQuarterPi / 4.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = {};
  c.delta_theta = -1.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}
