#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aupc/core/transform.hpp"
#include "aupc/data/dataset.hpp"
#include "aupc/render/image.hpp"
#include "aupc/render/layout.hpp"

namespace aupc {

// Additive curve density of one attribute pair over u in [-0.5, 1.5] and the
// layout's v range. Cells are in grid units of covered path length.
struct PairDensityField {
  std::size_t pair = 0;
  Image1 grid;

  double max() const;
  bool operator==(const PairDensityField&) const = default;
};

PairDensityField accumulate_density(const NormalizedDataset& d, std::size_t pair,
                                    const CanvasLayout& layout, const TransformConfig& cfg);

// Only the listed records contribute.
PairDensityField accumulate_density(const NormalizedDataset& d, std::size_t pair,
                                    const CanvasLayout& layout, const TransformConfig& cfg,
                                    std::span<const std::size_t> rows);

std::vector<PairDensityField> accumulate_all(const NormalizedDataset& d, const CanvasLayout& layout,
                                             const TransformConfig& cfg);

}  // namespace aupc
