#pragma once

#include <cstddef>
#include <vector>

#include "aupc/analysis/brush.hpp"
#include "aupc/core/curve.hpp"

namespace aupc::kernels {

// Ascending ids of records of d whose sampled curve touches the region. The
// region is assumed valid.
namespace serial {
std::vector<std::size_t> select(const Dataset& d, const BrushRegion& region, const CurveSampler& sampler);
}
namespace omp {
std::vector<std::size_t> select(const Dataset& d, const BrushRegion& region, const CurveSampler& sampler);
}

}  // namespace aupc::kernels
