#include "aupc/app/spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "aupc/core/error.hpp"

namespace aupc {

namespace {

// Object reader that remembers which keys were read so leftovers can be
// reported as unknown.
class Obj {
 public:
  Obj(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) fail("expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const Json* find(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const Json& need(const std::string& key) {
    const Json* v = find(key);
    if (!v) fail("missing required key '" + key + "'");
    return *v;
  }

  std::string at(const std::string& key) const { return where_ + "." + key; }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail("unknown key '" + it.key() + "'");
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SchemaError(where_ + ": " + msg); }

 private:
  const Json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

[[noreturn]] void fail(const std::string& where, const std::string& msg) { throw SchemaError(where + ": " + msg); }

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

bool boolean(const Json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected true or false");
  return j.get<bool>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::uint64_t unsigned_int(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) fail(where, "expected a non-negative integer");
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  fail(where, "expected a non-negative integer");
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -(1LL << 30) || v > (1LL << 30)) fail(where, "integer out of range");
  return static_cast<int>(v);
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

Rgb color(const Json& j, const std::string& where) {
  const Json& a = array(j, where);
  if (a.size() != 3) fail(where, "expected [r, g, b]");
  return {number(a[0], where + "[0]"), number(a[1], where + "[1]"), number(a[2], where + "[2]")};
}

std::pair<double, double> range(const Json& j, const std::string& where) {
  const Json& a = array(j, where);
  if (a.size() != 2) fail(where, "expected [low, high]");
  return {number(a[0], where + "[0]"), number(a[1], where + "[1]")};
}

template <typename F>
void semantic(const std::string& where, F&& f) {
  try {
    f();
  } catch (const InvalidArgument& e) {
    fail(where, e.what());
  }
}

StrokeStyle parse_stroke(const Json& j, const std::string& where, StrokeStyle s) {
  Obj o(j, where);
  if (auto* v = o.find("color")) s.color = color(*v, o.at("color"));
  if (auto* v = o.find("alpha")) s.alpha = number(*v, o.at("alpha"));
  if (auto* v = o.find("width")) s.width = number(*v, o.at("width"));
  o.finish();
  return s;
}

Json stroke_json(const StrokeStyle& s) {
  return {{"color", {s.color.r, s.color.g, s.color.b}}, {"alpha", s.alpha}, {"width", s.width}};
}

CurveStyle parse_style(const Json& j, const std::string& where) {
  Obj o(j, where);
  CurveStyle s;
  if (auto* v = o.find("curve")) s.regular = parse_stroke(*v, o.at("curve"), s.regular);
  if (auto* v = o.find("outlier")) s.outlier = parse_stroke(*v, o.at("outlier"), s.outlier);
  if (auto* v = o.find("axes")) s.draw_axes = boolean(*v, o.at("axes"));
  if (auto* v = o.find("axis")) s.axis = parse_stroke(*v, o.at("axis"), s.axis);
  o.finish();
  semantic(where, [&] { s.validate(); });
  return s;
}

TransformConfig parse_transform(const Json& j, const std::string& where) {
  Obj o(j, where);
  TransformConfig c;
  if (auto* v = o.find("epsilon")) c.epsilon = number(*v, o.at("epsilon"));
  if (auto* v = o.find("delta_theta")) c.delta_theta = number(*v, o.at("delta_theta"));
  if (auto* v = o.find("scaling")) c.scaling_enabled = boolean(*v, o.at("scaling"));
  o.finish();
  semantic(where, [&] { c.validate(); });
  return c;
}

CanvasLayout parse_layout(const Json& j, const std::string& where) {
  Obj o(j, where);
  CanvasLayout l;
  if (auto* v = o.find("pair_width")) l.pair_width = integer(*v, o.at("pair_width"));
  if (auto* v = o.find("height")) l.height = integer(*v, o.at("height"));
  if (auto* v = o.find("v_range")) std::tie(l.v_lo, l.v_hi) = range(*v, o.at("v_range"));
  if (auto* v = o.find("margin")) l.margin = integer(*v, o.at("margin"));
  if (auto* v = o.find("grid_columns")) l.grid_columns = integer(*v, o.at("grid_columns"));
  if (auto* v = o.find("grid_rows")) l.grid_rows = integer(*v, o.at("grid_rows"));
  o.finish();
  semantic(where, [&] { l.validate(); });
  return l;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

OutputPaths parse_output(const Json& j, const std::string& where, const std::filesystem::path& base) {
  Obj o(j, where);
  OutputPaths out;
  if (auto* v = o.find("image")) out.image = resolve(base, text(*v, o.at("image")));
  if (auto* v = o.find("curve_layer")) out.curve_layer = resolve(base, text(*v, o.at("curve_layer")));
  if (auto* v = o.find("density_layers")) out.density_layers = resolve(base, text(*v, o.at("density_layers"))).string();
  if (auto* v = o.find("masks")) out.masks = resolve(base, text(*v, o.at("masks"))).string();
  if (auto* v = o.find("selections")) out.selections = resolve(base, text(*v, o.at("selections")));
  if (auto* v = o.find("overlay")) out.overlay = resolve(base, text(*v, o.at("overlay")));
  o.finish();
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string() + ": invalid JSON: " + e.what());
  }
}

const char* mode_name(Normalization m) { return m == Normalization::kLog ? "log" : "linear"; }

}  // namespace

TransferFunction parse_transfer_function(const Json& doc, const std::string& where) {
  Obj o(doc, where);
  TransferFunction tf = default_transfer_function();
  if (auto* v = o.find("colors")) {
    const std::string w = o.at("colors");
    tf.colors.clear();
    for (std::size_t i = 0; i < array(*v, w).size(); ++i) {
      const std::string wi = w + "[" + std::to_string(i) + "]";
      Obj s((*v)[i], wi);
      tf.colors.push_back({number(s.need("position"), s.at("position")), color(s.need("color"), s.at("color"))});
      s.finish();
    }
  }
  if (auto* v = o.find("opacity")) {
    const std::string w = o.at("opacity");
    tf.opacity.clear();
    for (std::size_t i = 0; i < array(*v, w).size(); ++i) {
      const std::string wi = w + "[" + std::to_string(i) + "]";
      Obj s((*v)[i], wi);
      tf.opacity.push_back({number(s.need("position"), s.at("position")), number(s.need("alpha"), s.at("alpha"))});
      s.finish();
    }
  }
  if (auto* v = o.find("mode")) {
    const std::string m = text(*v, o.at("mode"));
    if (m == "linear") {
      tf.mode = Normalization::kLinear;
    } else if (m == "log") {
      tf.mode = Normalization::kLog;
    } else {
      fail(o.at("mode"), "expected \"linear\" or \"log\"");
    }
  }
  o.finish();
  return tf;
}

std::vector<TransferFunction> parse_transfer_functions(const Json& doc, const std::string& where) {
  if (doc.is_object()) return {parse_transfer_function(doc, where)};
  std::vector<TransferFunction> out;
  for (std::size_t i = 0; i < array(doc, where).size(); ++i) {
    out.push_back(parse_transfer_function(doc[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json to_json(const TransferFunction& tf) {
  Json colors = Json::array();
  for (const auto& c : tf.colors) colors.push_back({{"position", c.position}, {"color", {c.color.r, c.color.g, c.color.b}}});
  Json opacity = Json::array();
  for (const auto& p : tf.opacity) opacity.push_back({{"position", p.position}, {"alpha", p.alpha}});
  return {{"colors", colors}, {"opacity", opacity}, {"mode", mode_name(tf.mode)}};
}

CornerConfig parse_corner(const Json& doc, const std::string& where) {
  Obj o(doc, where);
  CornerConfig c;
  if (auto* v = o.find("window")) c.window = integer(*v, o.at("window"));
  if (auto* v = o.find("threshold")) c.threshold = number(*v, o.at("threshold"));
  if (auto* v = o.find("radius")) c.radius = integer(*v, o.at("radius"));
  if (auto* v = o.find("prefilter"); v && !v->is_null()) {
    Obj p(*v, o.at("prefilter"));
    PercentileConfig pc;
    if (auto* w = p.find("window")) pc.window = integer(*w, p.at("window"));
    if (auto* w = p.find("percentile")) pc.percentile = number(*w, p.at("percentile"));
    p.finish();
    c.prefilter = pc;
  }
  o.finish();
  semantic(where, [&] { c.validate(); });
  return c;
}

Json to_json(const CornerConfig& c) {
  Json j = {{"window", c.window}, {"threshold", c.threshold}, {"radius", c.radius}, {"prefilter", nullptr}};
  if (c.prefilter) j["prefilter"] = {{"window", c.prefilter->window}, {"percentile", c.prefilter->percentile}};
  return j;
}

BrushRegion parse_region(const Json& doc, const std::string& where) {
  Obj o(doc, where);
  const std::string type = text(o.need("type"), o.at("type"));
  const auto pair = static_cast<std::size_t>(unsigned_int(o.need("pair"), o.at("pair")));
  if (type == "rect") {
    RectRegion r;
    r.pair = pair;
    std::tie(r.u0, r.u1) = range(o.need("u"), o.at("u"));
    std::tie(r.v0, r.v1) = range(o.need("v"), o.at("v"));
    o.finish();
    return r;
  }
  if (type == "lasso") {
    LassoRegion l;
    l.pair = pair;
    const std::string w = o.at("points");
    const Json& pts = array(o.need("points"), w);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto [u, v] = range(pts[i], w + "[" + std::to_string(i) + "]");
      l.polygon.push_back({u, v});
    }
    o.finish();
    return l;
  }
  fail(o.at("type"), "expected \"rect\" or \"lasso\"");
}

Json to_json(const BrushRegion& region) {
  if (const auto* r = std::get_if<RectRegion>(&region)) {
    return {{"type", "rect"}, {"pair", r->pair}, {"u", {r->u0, r->u1}}, {"v", {r->v0, r->v1}}};
  }
  const auto& l = std::get<LassoRegion>(region);
  Json pts = Json::array();
  for (const auto& p : l.polygon) pts.push_back({p.u, p.v});
  return {{"type", "lasso"}, {"pair", l.pair}, {"points", pts}};
}

Json to_json(const Selection& sel) {
  return {{"pair", region_pair(sel.region)}, {"region", to_json(sel.region)}, {"record_ids", sel.record_ids}};
}

Json to_json(const RenderParams& p) {
  Json tfs = Json::array();
  for (const auto& tf : p.transfer_functions) tfs.push_back(to_json(tf));
  const auto& l = p.layout;
  Json j = {
      {"seed", p.seed},
      {"subsample", {{"rate", p.subsample_rate}}},
      {"outliers", {{"k", p.outlier_k}, {"reference_size", p.outlier_reference}}},
      {"transform",
       {{"epsilon", p.transform.epsilon}, {"delta_theta", p.transform.delta_theta}, {"scaling", p.transform.scaling_enabled}}},
      {"layout",
       {{"pair_width", l.pair_width},
        {"height", l.height},
        {"v_range", {l.v_lo, l.v_hi}},
        {"margin", l.margin},
        {"grid_columns", l.grid_columns},
        {"grid_rows", l.grid_rows}}},
      {"transfer_functions", tfs},
      {"corner", p.corner ? to_json(*p.corner) : Json(nullptr)},
      {"style",
       {{"curve", stroke_json(p.style.regular)},
        {"outlier", stroke_json(p.style.outlier)},
        {"axes", p.style.draw_axes},
        {"axis", stroke_json(p.style.axis)}}},
      {"background", p.background ? Json{p.background->r, p.background->g, p.background->b} : Json(nullptr)},
  };
  return j;
}

RenderSpec parse_render_spec(const Json& doc, const std::filesystem::path& base_dir) {
  Obj o(doc, "spec");
  RenderSpec s;
  RenderParams& p = s.params;
  s.input = resolve(base_dir, text(o.need("input"), o.at("input")));
  if (auto* v = o.find("axis_order")) {
    const std::string w = o.at("axis_order");
    for (std::size_t i = 0; i < array(*v, w).size(); ++i) {
      const Json& e = (*v)[i];
      const std::string wi = w + "[" + std::to_string(i) + "]";
      if (e.is_string()) {
        s.axis_names.push_back(e.get<std::string>());
      } else {
        s.axis_indices.push_back(static_cast<std::size_t>(unsigned_int(e, wi)));
      }
    }
    if (!s.axis_names.empty() && !s.axis_indices.empty()) fail(w, "use either names or indices, not both");
  }
  if (auto* v = o.find("seed")) p.seed = unsigned_int(*v, o.at("seed"));
  if (auto* v = o.find("subsample")) {
    Obj so(*v, o.at("subsample"));
    if (auto* r = so.find("rate")) p.subsample_rate = number(*r, so.at("rate"));
    so.finish();
    semantic(o.at("subsample"), [&] { SubsampleConfig{p.subsample_rate, 0}.validate(); });
  }
  if (auto* v = o.find("outliers")) {
    Obj oo(*v, o.at("outliers"));
    if (auto* k = oo.find("k")) p.outlier_k = static_cast<std::size_t>(unsigned_int(*k, oo.at("k")));
    if (auto* r = oo.find("reference_size")) {
      p.outlier_reference = static_cast<std::size_t>(unsigned_int(*r, oo.at("reference_size")));
      if (p.outlier_reference < 1) fail(oo.at("reference_size"), "must be >= 1");
    }
    oo.finish();
  }
  if (auto* v = o.find("transform")) p.transform = parse_transform(*v, o.at("transform"));
  if (auto* v = o.find("layout")) p.layout = parse_layout(*v, o.at("layout"));
  if (auto* v = o.find("transfer_functions")) {
    p.transfer_functions = parse_transfer_functions(*v, o.at("transfer_functions"));
    for (std::size_t i = 0; i < p.transfer_functions.size(); ++i) {
      semantic(o.at("transfer_functions") + "[" + std::to_string(i) + "]",
               [&] { p.transfer_functions[i].validate(); });
    }
  }
  if (auto* v = o.find("corner"); v && !v->is_null()) p.corner = parse_corner(*v, o.at("corner"));
  if (auto* v = o.find("style")) p.style = parse_style(*v, o.at("style"));
  if (auto* v = o.find("background")) {
    if (v->is_null()) {
      p.background.reset();
    } else {
      p.background = color(*v, o.at("background"));
      const Rgb& b = *p.background;
      for (double c : {b.r, b.g, b.b}) {
        if (!(c >= 0.0 && c <= 1.0)) fail(o.at("background"), "channels must lie in [0, 1]");
      }
    }
  }
  if (auto* v = o.find("brushes")) {
    const std::string w = o.at("brushes");
    for (std::size_t i = 0; i < array(*v, w).size(); ++i) {
      s.brushes.push_back(parse_region((*v)[i], w + "[" + std::to_string(i) + "]"));
    }
  }
  if (auto* v = o.find("output")) s.output = parse_output(*v, o.at("output"), base_dir);
  o.finish();
  return s;
}

RenderSpec load_render_spec(const std::filesystem::path& path) {
  return parse_render_spec(read_json_file(path), path.parent_path());
}

SyntheticSpec parse_synthetic_spec(const Json& doc) {
  Obj o(doc, "synthetic");
  SyntheticSpec spec;
  spec.segments.clear();
  if (auto* v = o.find("clip_to_unit_square")) spec.clip_to_unit_square = boolean(*v, o.at("clip_to_unit_square"));
  const std::string w = o.at("segments");
  const Json& segs = array(o.need("segments"), w);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string wi = w + "[" + std::to_string(i) + "]";
    Obj so(segs[i], wi);
    SegmentSpec s;
    s.angle_deg = number(so.need("angle_deg"), so.at("angle_deg"));
    std::tie(s.center_x, s.center_y) = range(so.need("center"), so.at("center"));
    s.half_length = number(so.need("half_length"), so.at("half_length"));
    s.count = static_cast<std::size_t>(unsigned_int(so.need("count"), so.at("count")));
    if (auto* x = so.find("sigma")) s.sigma = number(*x, so.at("sigma"));
    if (auto* x = so.find("structure")) s.structure = integer(*x, so.at("structure"));
    so.finish();
    spec.segments.push_back(s);
  }
  o.finish();
  semantic("synthetic", [&] { spec.validate(); });
  return spec;
}

SyntheticSpec load_synthetic_spec(const std::filesystem::path& path) {
  return parse_synthetic_spec(read_json_file(path));
}

Json to_json(const SyntheticSpec& spec) {
  Json segs = Json::array();
  for (const auto& s : spec.segments) {
    segs.push_back({{"angle_deg", s.angle_deg},
                    {"center", {s.center_x, s.center_y}},
                    {"half_length", s.half_length},
                    {"count", s.count},
                    {"sigma", s.sigma},
                    {"structure", s.structure}});
  }
  return {{"clip_to_unit_square", spec.clip_to_unit_square}, {"segments", segs}};
}

}  // namespace aupc
