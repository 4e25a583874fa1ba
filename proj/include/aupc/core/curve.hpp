#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aupc/core/transform.hpp"

namespace aupc {

struct TransformedCurve {
  std::vector<TransformedPoint> samples;
  std::size_t record = 0;
  std::size_t pair = 0;
};

// Precomputed sampling of transformed parallel-coordinate lines.
//
// v is linear in the record values: v(u) = p1 * left(u) + p2 * right(u). The
// sampler stores u and both coefficients per sample once per configuration,
// so each curve costs two multiply-adds per sample. Immutable after
// construction.
class CurveSampler {
 public:
  explicit CurveSampler(const TransformConfig& cfg);

  const TransformConfig& config() const { return cfg_; }
  std::size_t size() const { return u_.size(); }
  std::span<const double> u() const { return u_; }

  double v(std::size_t sample, CartesianPoint2 p) const {
    return p.p1 * left_[sample] + p.p2 * right_[sample];
  }

  TransformedCurve curve(CartesianPoint2 p, std::size_t record = 0, std::size_t pair = 0) const;

  // Writes v for every sample into out (size() entries).
  void evaluate(CartesianPoint2 p, std::span<double> out) const;

  // First and one-past-last sample index with 0 <= u <= 1.
  std::size_t inner_begin() const { return inner_begin_; }
  std::size_t inner_end() const { return inner_end_; }

 private:
  TransformConfig cfg_;
  std::vector<double> u_;
  std::vector<double> left_;
  std::vector<double> right_;
  std::size_t inner_begin_ = 0;
  std::size_t inner_end_ = 0;
};

// Transformed curve of the parallel-coordinate line of p.
TransformedCurve transform_pc_line(CartesianPoint2 p, const TransformConfig& cfg);

// v at an arbitrary u in [-0.5, 1.5], including the limit locations; scaled
// when cfg.scaling_enabled.
double curve_v_at(CartesianPoint2 p, double u, const TransformConfig& cfg);

}  // namespace aupc
