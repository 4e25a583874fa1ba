#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aupc/analysis/brush.hpp"
#include "aupc/analysis/corner.hpp"
#include "aupc/core/transform.hpp"
#include "aupc/data/sampling.hpp"
#include "aupc/data/synthetic.hpp"
#include "aupc/render/layers.hpp"
#include "aupc/render/layout.hpp"
#include "aupc/render/transfer.hpp"

namespace aupc {

using Json = nlohmann::json;

// Everything that changes pixels. Shared by the CLI and the service.
struct RenderParams {
  std::uint64_t seed = 1;
  double subsample_rate = 0.05;
  std::size_t outlier_k = 5;
  std::size_t outlier_reference = 20;
  TransformConfig transform;
  CanvasLayout layout;
  // Empty: default for every pair. One entry: used for every pair. Otherwise
  // one per pair.
  std::vector<TransferFunction> transfer_functions;
  std::optional<CornerConfig> corner;
  CurveStyle style;
  std::optional<Rgb> background = Rgb{0.0, 0.0, 0.0};

  bool operator==(const RenderParams&) const = default;
};

struct OutputPaths {
  std::optional<std::filesystem::path> image;
  std::optional<std::filesystem::path> curve_layer;
  // "{pair}" is replaced by the pair index.
  std::optional<std::string> density_layers;
  std::optional<std::string> masks;
  std::optional<std::filesystem::path> selections;
  std::optional<std::filesystem::path> overlay;
};

struct RenderSpec {
  std::filesystem::path input;
  // Column names or indices in the desired axis order; empty keeps file order.
  std::vector<std::string> axis_names;
  std::vector<std::size_t> axis_indices;
  RenderParams params;
  std::vector<BrushRegion> brushes;
  OutputPaths output;
};

// Parsing throws SchemaError for malformed documents, unknown keys and
// out-of-range values. Relative paths are resolved against base_dir.
RenderSpec parse_render_spec(const Json& doc, const std::filesystem::path& base_dir);
RenderSpec load_render_spec(const std::filesystem::path& path);

SyntheticSpec parse_synthetic_spec(const Json& doc);
SyntheticSpec load_synthetic_spec(const std::filesystem::path& path);
Json to_json(const SyntheticSpec& spec);

// Structural parse only; TransferFunction::validate() is left to the caller
// so that the service can report it separately.
TransferFunction parse_transfer_function(const Json& doc, const std::string& where);
std::vector<TransferFunction> parse_transfer_functions(const Json& doc, const std::string& where);
Json to_json(const TransferFunction& tf);

CornerConfig parse_corner(const Json& doc, const std::string& where);
Json to_json(const CornerConfig& cfg);

BrushRegion parse_region(const Json& doc, const std::string& where);
Json to_json(const BrushRegion& region);
Json to_json(const Selection& sel);

// Canonical JSON of the parameters; equal params give equal text.
Json to_json(const RenderParams& params);

}  // namespace aupc
