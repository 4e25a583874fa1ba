#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "aupc/data/dataset.hpp"

namespace aupc {

// Points scattered along one line segment with Gaussian noise perpendicular
// to it. `structure` groups segments that form one visual pattern (the nine
// parallel segments of the default spec share one).
struct SegmentSpec {
  double angle_deg = 0.0;
  double center_x = 0.5;
  double center_y = 0.5;
  double half_length = 0.25;
  std::size_t count = 100;
  double sigma = 0.0;
  int structure = 0;
};

struct SyntheticSpec {
  std::vector<SegmentSpec> segments;
  // Samples outside the unit square are redrawn, so both output columns span
  // (nearly) [0, 1] and min-max normalisation leaves angles intact.
  bool clip_to_unit_square = true;

  void validate() const;
};

struct SyntheticData {
  Dataset data;                  // columns x1, x2
  std::vector<int> structure;    // per row
  std::vector<std::size_t> segment;  // per row
};

// Twelve segments: -5, 15 and 56 degrees plus nine parallel 30 degree
// segments; the 15 degree segment carries four times the per-segment count.
SyntheticSpec default_synthetic_spec();

// Structure ids used by default_synthetic_spec().
enum DefaultStructure : int { kMinus5 = 0, kDeg15 = 1, kDeg56 = 2, kDeg30 = 3 };

SyntheticData generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

}  // namespace aupc
