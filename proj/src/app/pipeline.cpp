#include "aupc/app/pipeline.hpp"

#include <algorithm>

#include "aupc/analysis/corner.hpp"
#include "aupc/core/error.hpp"
#include "aupc/render/layers.hpp"
#include "aupc/render/transfer.hpp"

namespace aupc {

namespace {

const TransferFunction& default_tf() {
  static const TransferFunction tf = default_transfer_function();
  return tf;
}

}  // namespace

NormalizedDataset prepare_dataset(const Dataset& raw, const RenderSpec& spec) {
  std::vector<std::size_t> order;
  if (!spec.axis_names.empty()) {
    for (const auto& name : spec.axis_names) {
      const auto& names = raw.names();
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw InvalidArgument("axis_order: no column named '" + name + "'");
      order.push_back(static_cast<std::size_t>(it - names.begin()));
    }
  } else {
    order = spec.axis_indices;
  }
  if (order.empty()) return normalize(raw);
  return normalize(reorder_axes(raw, order));
}

PreparedData prepare_dataset(const RenderSpec& spec) {
  LoadedCsv loaded = load_csv(spec.input);
  return {prepare_dataset(loaded.data, spec), loaded.report};
}

CanvasLayout effective_layout(const RenderParams& p, std::size_t pairs) {
  CanvasLayout l = p.layout;
  l.pairs = std::max<std::size_t>(1, pairs);
  return l;
}

const TransferFunction& transfer_for(const RenderParams& p, std::size_t pair) {
  if (p.transfer_functions.empty()) return default_tf();
  if (p.transfer_functions.size() == 1) return p.transfer_functions.front();
  if (pair >= p.transfer_functions.size()) throw InvalidArgument("no transfer function for pair");
  return p.transfer_functions[pair];
}

void validate_params(const RenderParams& p, std::size_t pairs) {
  const std::size_t n = p.transfer_functions.size();
  if (n > 1 && n != pairs) {
    throw InvalidArgument("need one transfer function, or one per pair (" + std::to_string(pairs) + ")");
  }
  for (const auto& tf : p.transfer_functions) tf.validate();
  p.transform.validate();
  effective_layout(p, pairs).validate();
  SubsampleConfig{p.subsample_rate, p.seed}.validate();
  if (p.outlier_reference < 1) throw InvalidArgument("outlier reference size must be >= 1");
  if (p.corner) p.corner->validate();
  p.style.validate();
}

std::vector<PairDensityField> compute_fields(const NormalizedDataset& d, const RenderParams& p) {
  return accumulate_all(d, effective_layout(p, d.pairs()), p.transform);
}

RenderResult render(const NormalizedDataset& d, const RenderParams& p, const std::vector<PairDensityField>* fields) {
  validate_params(p, d.pairs());
  const CanvasLayout layout = effective_layout(p, d.pairs());
  std::vector<PairDensityField> own;
  if (!fields) {
    own = compute_fields(d, p);
    fields = &own;
  }
  if (fields->size() != d.pairs()) throw DimensionMismatch("density fields do not match the pair count");

  RenderResult out;
  const std::size_t rows = d.rows();
  const SubsampleConfig sc{p.subsample_rate, p.seed};
  const OutlierConfig oc{std::min(p.outlier_k, rows), std::min(p.outlier_reference, rows), p.seed + 1};
  out.sample = rows ? subsample(d, sc, oc) : SubsampleResult{};

  std::vector<std::size_t> regular;
  std::vector<std::size_t> outliers = out.sample.outliers;
  std::sort(outliers.begin(), outliers.end());
  std::set_difference(out.sample.indices.begin(), out.sample.indices.end(), outliers.begin(), outliers.end(),
                      std::back_inserter(regular));
  out.curve = render_curve_layer(d, regular, out.sample.outliers, layout, p.transform, p.style);

  std::vector<MaskImage> placed_masks;
  for (std::size_t pair = 0; pair < d.pairs(); ++pair) {
    const auto& field = (*fields)[pair];
    out.density.push_back(place_pair_layer(apply_transfer(field, transfer_for(p, pair)), pair, layout));
    if (p.corner) {
      out.masks.push_back(corner_mask(field.grid, *p.corner));
      placed_masks.push_back(place_pair_mask(out.masks.back(), pair, layout));
    }
  }
  out.image = composite(out.curve, out.density, placed_masks);
  if (p.background) out.image = flatten(out.image, *p.background);
  return out;
}

LayerImage brush_overlay(const NormalizedDataset& d, const RenderParams& p, const LayerImage& base,
                         const std::vector<Selection>& selections) {
  const CanvasLayout layout = effective_layout(p, d.pairs());
  LayerImage out = base;
  for (std::size_t i = 0; i < selections.size(); ++i) {
    CurveStyle style;
    style.draw_axes = false;
    constexpr std::size_t kColors = sizeof(kSelectionPalette) / sizeof(kSelectionPalette[0]);
    style.regular = {kSelectionPalette[i % kColors], 0.8, 1.0};
    const LayerImage layer = render_curve_layer(d, selections[i].record_ids, {}, layout, p.transform, style);
    const LayerImage none[] = {layer};
    out = composite(out, none);
  }
  return out;
}

std::string fill_pair(const std::string& pattern, std::size_t pair) {
  std::string out = pattern;
  const std::string key = "{pair}";
  const auto pos = out.find(key);
  if (pos == std::string::npos) {
    // No placeholder: insert the index before the extension.
    const auto dot = out.rfind('.');
    const std::string suffix = "_" + std::to_string(pair);
    return dot == std::string::npos ? out + suffix : out.insert(dot, suffix);
  }
  return out.replace(pos, key.size(), std::to_string(pair));
}

}  // namespace aupc
