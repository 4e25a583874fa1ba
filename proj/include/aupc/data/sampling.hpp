#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aupc/data/dataset.hpp"

namespace aupc {

struct SubsampleConfig {
  double rate = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
};

struct OutlierConfig {
  std::size_t k = 5;
  std::size_t reference_size = 20;
  std::uint64_t seed = 0;
};

struct OutlierScore {
  std::size_t index;
  double score;
};

struct SubsampleResult {
  std::vector<std::size_t> indices;   // ascending, unique; includes outliers
  std::vector<std::size_t> outliers;  // top-k by score, in rank order
};

// Distance from each record to its nearest neighbour inside a seeded random
// reference sample (the record itself excluded), sorted by descending score
// with ties broken by ascending index.
std::vector<OutlierScore> outlier_scores(const NormalizedDataset& d, const OutlierConfig& oc);

// Uniform sample of round(rate * R) records without replacement, unioned with
// the top-k outliers.
SubsampleResult subsample(const NormalizedDataset& d, const SubsampleConfig& sc, const OutlierConfig& oc);

}  // namespace aupc
