#pragma once

#include <cstddef>
#include <span>

#include "aupc/core/curve.hpp"
#include "aupc/data/dataset.hpp"
#include "aupc/render/image.hpp"
#include "aupc/render/layout.hpp"

namespace aupc::kernels {

// Rasterizes the full curve of every listed record of columns (pair, pair+1)
// into a layout.columns() x layout.rows() grid. An empty row list means all
// rows.
namespace serial {
Image1 accumulate(const Dataset& d, std::size_t pair, const CanvasLayout& layout,
                  const CurveSampler& sampler, std::span<const std::size_t> rows = {});
}

// Same result as serial::accumulate, bit for bit: every thread fills a private
// grid and the grids are summed. Deposits are quantized so the sum is exact.
namespace omp {
Image1 accumulate(const Dataset& d, std::size_t pair, const CanvasLayout& layout,
                  const CurveSampler& sampler, std::span<const std::size_t> rows = {});
}

}  // namespace aupc::kernels
