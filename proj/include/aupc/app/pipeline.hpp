#pragma once

#include <cstddef>
#include <vector>

#include "aupc/analysis/brush.hpp"
#include "aupc/app/spec.hpp"
#include "aupc/data/dataset.hpp"
#include "aupc/data/sampling.hpp"
#include "aupc/render/density.hpp"
#include "aupc/render/image.hpp"
#include "aupc/render/png.hpp"

namespace aupc {

struct PreparedData {
  NormalizedDataset data;
  LoadReport report;
};

// Loads spec.input, applies the axis order and normalizes.
PreparedData prepare_dataset(const RenderSpec& spec);
NormalizedDataset prepare_dataset(const Dataset& raw, const RenderSpec& spec);

// Layout with the pair count of the data filled in.
CanvasLayout effective_layout(const RenderParams& p, std::size_t pairs);
const TransferFunction& transfer_for(const RenderParams& p, std::size_t pair);
// Throws InvalidArgument when the transfer function count does not fit the
// pair count or any part of the parameters is invalid.
void validate_params(const RenderParams& p, std::size_t pairs);

std::vector<PairDensityField> compute_fields(const NormalizedDataset& d, const RenderParams& p);

struct RenderResult {
  LayerImage image;                  // final, over the background if any
  LayerImage curve;                  // canvas sized
  std::vector<LayerImage> density;   // canvas sized, before masking
  std::vector<MaskImage> masks;      // grid sized; empty without corner filtering
  SubsampleResult sample;
};

// fields may be precomputed by compute_fields with the same transform and
// layout; otherwise they are computed here.
RenderResult render(const NormalizedDataset& d, const RenderParams& p,
                    const std::vector<PairDensityField>* fields = nullptr);

// The final image with the curves of each selection drawn on top, one color
// per selection.
LayerImage brush_overlay(const NormalizedDataset& d, const RenderParams& p, const LayerImage& base,
                         const std::vector<Selection>& selections);

inline constexpr Rgb kSelectionPalette[] = {
    {0.95, 0.55, 0.05}, {0.1, 0.7, 0.3}, {0.85, 0.1, 0.55}, {0.1, 0.6, 0.85}, {0.6, 0.35, 0.1}};

std::string fill_pair(const std::string& pattern, std::size_t pair);

}  // namespace aupc
