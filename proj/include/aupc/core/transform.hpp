#pragma once

// Point-line duality and the angle-uniform deformation of indexed points.
//
// Attribute pairs live in the unit-spaced parallel-coordinate plane: the left
// axis at x = 0, the right axis at x = 1. The deformed plane keeps the axes at
// u = 0 and u = 1 and bounds everything else to u in [-0.5, 1.5].

#include <numbers>
#include <variant>

#include "aupc/core/error.hpp"

namespace aupc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kQuarterPi = std::numbers::pi / 4.0;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// |theta - pi/4| at or below this is treated as slope +1.
inline constexpr double kTwinTolerance = 1e-12;

// Homogeneous line c1*x1 + c2*x2 + c3 = 0.
class LineCoords {
 public:
  LineCoords(double c1, double c2, double c3);

  static LineCoords from_slope_intercept(double a, double b);

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double c3() const { return c3_; }

  bool is_vertical() const { return c2_ == 0.0; }
  LineCoords scaled(double lambda) const;

 private:
  double c1_;
  double c2_;
  double c3_;
};

// Orientation of a Cartesian line, canonicalised so vertical lines carry +pi/2.
class Angle {
 public:
  explicit Angle(double radians);
  double radians() const { return theta_; }
  bool is_slope_one() const;

 private:
  double theta_;
};

struct TraditionalIndexedPoint {
  double hx = 0.0;
  double hy = 0.0;
  double hw = 0.0;

  bool at_infinity() const { return hw == 0.0; }
  double x() const { return hx / hw; }
  double y() const { return hy / hw; }
};

struct TransformedPoint {
  double u = 0.0;
  double v = 0.0;

  bool operator==(const TransformedPoint&) const = default;
};

struct TwinPoint {
  TransformedPoint left;   // u = -0.5
  TransformedPoint right;  // u = 1.5
};

using TransformResult = std::variant<TransformedPoint, TwinPoint>;

// Normalised attribute values of one record restricted to an attribute pair.
struct CartesianPoint2 {
  double p1 = 0.0;
  double p2 = 0.0;
};

struct TransformConfig {
  double epsilon = 1e-6;
  double delta_theta = kPi / 360.0;
  bool scaling_enabled = false;

  void validate() const;
  bool operator==(const TransformConfig&) const = default;
};

// Result of the horizontal mapping: a single u or the twin pair {-0.5, 1.5}.
struct HorizontalPosition {
  bool twin = false;
  double u = 0.0;  // meaningful only when !twin
};

enum class LimitTarget { kLeftBound, kCenter, kRightBound };

double limit_target_u(LimitTarget target);

LineCoords line_from_slope_intercept(double a, double b);

// Line through p with orientation theta, scaled by (sin, -cos) so that vertical
// lines need no special case.
LineCoords line_through(CartesianPoint2 p, double theta);

TraditionalIndexedPoint dual_point_traditional(const LineCoords& l);

Angle orientation(const LineCoords& l);

HorizontalPosition horizontal_u(Angle theta);

// Inverse of the horizontal mapping on each branch: u <= 0 uses theta in
// (pi/4, pi/2], u > 0 uses theta in (-pi/2, pi/4).
double theta_for_u(double u);

// Throws LimitCaseError when u is -0.5, 0.5 or 1.5 or when c1 == c2.
double vertical_v(const LineCoords& l, double u);

// v of the transformed curve of p at u, straight from the formula.
// u must not be one of the excluded values.
double curve_v_formula(CartesianPoint2 p, double u);

// Limit of v along the family of lines through p. Numeric: one-sided values
// are Richardson-extrapolated from offsets eps and 2*eps in u.
double limit_v_at(CartesianPoint2 p, LimitTarget target, const TransformConfig& cfg);

// Exact values of the same limits.
double limit_v_closed_form(CartesianPoint2 p, LimitTarget target);

TransformResult transform_indexed_point(const LineCoords& l, const TransformConfig& cfg);

}  // namespace aupc
