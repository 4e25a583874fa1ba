#include "aupc/render/density.hpp"

#include <algorithm>

#include "aupc/core/curve.hpp"
#include "aupc/kernels/density.hpp"

namespace aupc {

double PairDensityField::max() const {
  const auto& c = grid.cells();
  return c.empty() ? 0.0 : *std::max_element(c.begin(), c.end());
}

PairDensityField accumulate_density(const NormalizedDataset& d, std::size_t pair,
                                    const CanvasLayout& layout, const TransformConfig& cfg,
                                    std::span<const std::size_t> rows) {
  layout.validate();
  const CurveSampler sampler(cfg);
  PairDensityField f;
  f.pair = pair;
  if (rows.empty()) {
    if (pair + 1 >= d.columns()) throw InvalidArgument("pair index out of range");
    f.grid = Image1(layout.columns(), layout.rows());
    return f;
  }
  f.grid = kernels::omp::accumulate(d.data, pair, layout, sampler, rows);
  return f;
}

PairDensityField accumulate_density(const NormalizedDataset& d, std::size_t pair,
                                    const CanvasLayout& layout, const TransformConfig& cfg) {
  layout.validate();
  const CurveSampler sampler(cfg);
  return {pair, kernels::omp::accumulate(d.data, pair, layout, sampler)};
}

std::vector<PairDensityField> accumulate_all(const NormalizedDataset& d, const CanvasLayout& layout,
                                             const TransformConfig& cfg) {
  std::vector<PairDensityField> out;
  out.reserve(d.pairs());
  for (std::size_t p = 0; p < d.pairs(); ++p) out.push_back(accumulate_density(d, p, layout, cfg));
  return out;
}

}  // namespace aupc
