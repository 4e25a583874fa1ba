#include "aupc/core/transform.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "aupc/core/scaling_spline.hpp"

namespace aupc {

namespace {

bool finite(double x) { return std::isfinite(x); }

bool is_excluded_u(double u) { return u == -0.5 || u == 0.5 || u == 1.5; }

}  // namespace

LineCoords::LineCoords(double c1, double c2, double c3) : c1_(c1), c2_(c2), c3_(c3) {
  if (!finite(c1) || !finite(c2) || !finite(c3)) {
    throw InvalidArgument("line coordinates must be finite");
  }
  if (c1 == 0.0 && c2 == 0.0) {
    throw InvalidArgument("line coordinates with c1 = c2 = 0 do not describe a line");
  }
}

LineCoords LineCoords::from_slope_intercept(double a, double b) {
  if (!finite(a) || !finite(b)) {
    throw InvalidArgument("slope and intercept must be finite");
  }
  return LineCoords(a, -1.0, b);
}

LineCoords LineCoords::scaled(double lambda) const {
  if (lambda == 0.0 || !finite(lambda)) {
    throw InvalidArgument("homogeneous scale must be finite and nonzero");
  }
  return LineCoords(lambda * c1_, lambda * c2_, lambda * c3_);
}

Angle::Angle(double radians) : theta_(radians) {
  if (!finite(radians) || radians < -kHalfPi || radians > kHalfPi) {
    throw InvalidArgument("orientation must lie in [-pi/2, pi/2], got " + std::to_string(radians));
  }
  if (theta_ == -kHalfPi) theta_ = kHalfPi;
}

bool Angle::is_slope_one() const { return std::abs(theta_ - kQuarterPi) <= kTwinTolerance; }

void TransformConfig::validate() const {
  if (!(epsilon > 0.0) || !finite(epsilon)) throw InvalidArgument("epsilon must be positive");
  if (!(delta_theta > 0.0) || !finite(delta_theta)) {
    throw InvalidArgument("delta_theta must be positive");
  }
  if (!(epsilon < delta_theta)) throw InvalidArgument("epsilon must be smaller than delta_theta");
  // The shortest sampled branch spans pi/4.
  if (kQuarterPi / delta_theta < 8.0) {
    throw InvalidArgument("delta_theta must split each sampled branch into at least 8 steps");
  }
}

double limit_target_u(LimitTarget target) {
  switch (target) {
    case LimitTarget::kLeftBound:
      return -0.5;
    case LimitTarget::kCenter:
      return 0.5;
    case LimitTarget::kRightBound:
      return 1.5;
  }
  return 0.5;
}

LineCoords line_from_slope_intercept(double a, double b) {
  return LineCoords::from_slope_intercept(a, b);
}

LineCoords line_through(CartesianPoint2 p, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return LineCoords(s, -c, c * p.p2 - s * p.p1);
}

TraditionalIndexedPoint dual_point_traditional(const LineCoords& l) {
  if (l.c2() != 0.0) {
    return {l.c2(), -l.c3(), l.c1() + l.c2()};
  }
  return {0.0, -l.c3() / l.c1(), 1.0};
}

Angle orientation(const LineCoords& l) {
  if (l.is_vertical()) return Angle(kHalfPi);
  return Angle(std::atan(-l.c1() / l.c2()));
}

HorizontalPosition horizontal_u(Angle theta) {
  const double t = theta.radians();
  if (theta.is_slope_one()) return {true, 0.0};
  if (t > kQuarterPi) return {false, 2.0 * t / kPi - 1.0};
  return {false, 2.0 * t / kPi + 1.0};
}

double theta_for_u(double u) {
  if (u <= 0.0) return (u + 1.0) * kHalfPi;
  return (u - 1.0) * kHalfPi;
}

double vertical_v(const LineCoords& l, double u) {
  if (is_excluded_u(u)) {
    throw LimitCaseError("vertical_v is undefined at u = " + std::to_string(u) +
                         "; evaluate the limit with limit_v_at");
  }
  if (l.c1() == l.c2()) {
    throw LimitCaseError("vertical_v is undefined for slope -1 lines (c1 == c2); use limit_v_at");
  }
  return 2.0 * l.c3() * (u - 0.5) / (l.c1() - l.c2());
}

double curve_v_formula(CartesianPoint2 p, double u) {
  return vertical_v(line_through(p, theta_for_u(u)), u);
}

double limit_v_at(CartesianPoint2 p, LimitTarget target, const TransformConfig& cfg) {
  const double eps = cfg.epsilon;
  if (!(eps > 0.0) || eps >= 0.25) throw InvalidArgument("limit offset must lie in (0, 0.25)");

  auto one_sided = [&](double base, double direction) {
    const double near = curve_v_formula(p, base + direction * eps);
    const double far = curve_v_formula(p, base + direction * 2.0 * eps);
    return std::pair{near, 2.0 * near - far};
  };

  double result = 0.0;
  switch (target) {
    case LimitTarget::kCenter: {
      const auto [left_raw, left] = one_sided(0.5, -1.0);
      const auto [right_raw, right] = one_sided(0.5, 1.0);
      if (!finite(left) || !finite(right) || std::abs(left - right) > 1e-6) {
        throw NumericalLimitError("one-sided limits at u = 0.5 disagree: " + std::to_string(left) +
                                  " vs " + std::to_string(right));
      }
      result = 0.5 * (left_raw + right_raw);
      break;
    }
    case LimitTarget::kLeftBound:
      result = one_sided(-0.5, 1.0).second;
      break;
    case LimitTarget::kRightBound:
      result = one_sided(1.5, -1.0).second;
      break;
  }
  if (!finite(result)) throw NumericalLimitError("limit evaluation produced a non-finite value");
  return result;
}

double limit_v_closed_form(CartesianPoint2 p, LimitTarget target) {
  switch (target) {
    case LimitTarget::kLeftBound:
      return p.p1 - p.p2;
    case LimitTarget::kCenter:
      return 2.0 * (p.p1 + p.p2) / kPi;
    case LimitTarget::kRightBound:
      return p.p2 - p.p1;
  }
  return 0.0;
}

TransformResult transform_indexed_point(const LineCoords& l, const TransformConfig& cfg) {
  const Angle theta = orientation(l);
  const HorizontalPosition pos = horizontal_u(theta);
  auto scale = [&](double u, double v) {
    return cfg.scaling_enabled ? v * default_scaling_spline()(u) : v;
  };

  if (pos.twin) {
    // Any point of the line works: the limits only depend on its intercept.
    const CartesianPoint2 on_line{0.0, -l.c3() / l.c2()};
    const double left = limit_v_at(on_line, LimitTarget::kLeftBound, cfg);
    const double right = limit_v_at(on_line, LimitTarget::kRightBound, cfg);
    return TwinPoint{{-0.5, scale(-0.5, left)}, {1.5, scale(1.5, right)}};
  }

  const bool slope_minus_one =
      l.c1() == l.c2() || std::abs(theta.radians() + kQuarterPi) <= kTwinTolerance;
  if (slope_minus_one) {
    const CartesianPoint2 on_line{0.0, -l.c3() / l.c2()};
    const double v = limit_v_at(on_line, LimitTarget::kCenter, cfg);
    return TransformedPoint{0.5, scale(0.5, v)};
  }
  return TransformedPoint{pos.u, scale(pos.u, vertical_v(l, pos.u))};
}

}  // namespace aupc
