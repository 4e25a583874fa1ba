#include "aupc/service/service.hpp"

#include <httplib.h>

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "aupc/core/curve.hpp"
#include "aupc/core/error.hpp"
#include "aupc/render/png.hpp"

namespace aupc {

namespace {

HttpResponse json_response(int status, const Json& j) { return {status, "application/json", j.dump()}; }

HttpResponse error(int status, const std::string& msg) { return json_response(status, {{"error", msg}}); }

HttpResponse not_loaded() { return error(503, "no dataset loaded"); }

const std::string* query_value(const QueryParams& q, const std::string& key) {
  auto it = q.find(key);
  return it == q.end() ? nullptr : &it->second;
}

bool parse_index(const std::string& s, std::size_t& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::string transform_key(const RenderParams& p) {
  Json j = to_json(p);
  return Json{{"transform", j["transform"]}, {"layout", j["layout"]}}.dump();
}

// Request body on top of the snapshot defaults. SchemaError for structural
// problems; invalid transfer functions are reported by the caller.
RenderParams merge_render_body(const Json& body, const RenderParams& base) {
  if (!body.is_object()) throw SchemaError("body: expected an object");
  RenderParams p = base;
  for (auto it = body.begin(); it != body.end(); ++it) {
    const std::string& key = it.key();
    if (key == "transfer_functions") {
      p.transfer_functions = parse_transfer_functions(it.value(), "body.transfer_functions");
    } else if (key == "scaling") {
      if (!it.value().is_boolean()) throw SchemaError("body.scaling: expected true or false");
      p.transform.scaling_enabled = it.value().get<bool>();
    } else if (key == "corner") {
      if (it.value().is_null()) {
        p.corner.reset();
      } else {
        p.corner = parse_corner(it.value(), "body.corner");
      }
    } else {
      throw SchemaError("body: unknown key '" + key + "'");
    }
  }
  return p;
}

}  // namespace

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::shared_ptr<const SessionSnapshot> SessionSnapshot::build(NormalizedDataset data, RenderParams params) {
  validate_params(params, data.pairs());
  auto snap = std::make_shared<SessionSnapshot>();
  snap->axis_order = data.data.names();
  snap->fields = compute_fields(data, params);
  snap->data = std::move(data);
  snap->params = std::move(params);
  snap->config_hash = digest(to_json(snap->params).dump());
  return snap;
}

Service::Service() = default;
Service::~Service() { stop(); }

void Service::load(std::shared_ptr<const SessionSnapshot> snapshot) {
  std::unique_lock lock(snapshot_mutex_);
  snapshot_ = std::move(snapshot);
  std::unique_lock cache_lock(cache_mutex_);
  render_cache_.clear();
  std::lock_guard fields_lock(fields_mutex_);
  field_cache_.clear();
}

bool Service::loaded() const { return snapshot() != nullptr; }

std::shared_ptr<const SessionSnapshot> Service::snapshot() const {
  std::shared_lock lock(snapshot_mutex_);
  return snapshot_;
}

std::size_t Service::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return render_cache_.size();
}

std::shared_ptr<const std::vector<PairDensityField>> Service::fields_for(const SessionSnapshot& snap,
                                                                         const RenderParams& p) {
  const std::string key = transform_key(p);
  if (key == transform_key(snap.params)) {
    return std::shared_ptr<const std::vector<PairDensityField>>(std::shared_ptr<const SessionSnapshot>(), &snap.fields);
  }
  std::lock_guard lock(fields_mutex_);
  auto it = field_cache_.find(key);
  if (it != field_cache_.end()) return it->second;
  auto fields = std::make_shared<const std::vector<PairDensityField>>(compute_fields(snap.data, p));
  field_cache_.emplace(key, fields);
  return fields;
}

HttpResponse Service::meta() const {
  const auto snap = snapshot();
  if (!snap) return not_loaded();
  const auto& d = snap->data;
  Json ranges = Json::array();
  for (std::size_t c = 0; c < d.columns(); ++c) ranges.push_back({d.original[c].min, d.original[c].max});
  const auto& l = snap->params.layout;
  return json_response(200, {{"attributes", d.data.names()},
                             {"row_count", d.rows()},
                             {"pair_count", d.pairs()},
                             {"extents", {{"u", {-0.5, 1.5}}, {"v", {l.v_lo, l.v_hi}}}},
                             {"attribute_ranges", ranges},
                             {"config_hash", snap->config_hash}});
}

HttpResponse Service::render(const std::string& body, const QueryParams& query) {
  const auto snap = snapshot();
  if (!snap) return not_loaded();

  std::string layer = "final";
  if (const auto* v = query_value(query, "layer")) layer = *v;
  std::size_t pair = 0;
  if (layer == "density" || layer == "mask") {
    const auto* v = query_value(query, "pair");
    if (!v || !parse_index(*v, pair) || pair >= snap->data.pairs()) return error(400, "layer needs a valid pair");
  } else if (layer != "final" && layer != "curve") {
    return error(400, "layer must be one of final, curve, density, mask");
  }

  RenderParams params;
  try {
    const Json doc = body.empty() ? Json::object() : Json::parse(body);
    params = merge_render_body(doc, snap->params);
  } catch (const Json::parse_error& e) {
    return error(400, std::string("invalid JSON: ") + e.what());
  } catch (const SchemaError& e) {
    return error(400, e.what());
  }
  try {
    for (const auto& tf : params.transfer_functions) tf.validate();
    const std::size_t n = params.transfer_functions.size();
    if (n > 1 && n != snap->data.pairs()) throw InvalidArgument("need one transfer function, or one per pair");
  } catch (const InvalidArgument& e) {
    return error(422, std::string("invalid transfer function: ") + e.what());
  }
  if (layer == "mask" && !params.corner) return error(400, "mask layer needs a corner config");

  const std::string key =
      Json{{"params", to_json(params)}, {"layer", layer}, {"pair", pair}, {"snapshot", snap->config_hash}}.dump();
  {
    std::shared_lock lock(cache_mutex_);
    auto it = render_cache_.find(key);
    if (it != render_cache_.end()) return {200, "image/png", *it->second};
  }

  Bytes png;
  try {
    const auto fields = fields_for(*snap, params);
    const RenderResult r = aupc::render(snap->data, params, fields.get());
    if (layer == "final") {
      png = encode_png(r.image);
    } else if (layer == "curve") {
      png = encode_png(r.curve);
    } else if (layer == "density") {
      png = encode_png(r.density[pair]);
    } else {
      png = encode_gray_png(r.masks[pair]);
    }
  } catch (const InvalidArgument& e) {
    return error(400, e.what());
  } catch (const NumericalLimitError& e) {
    return error(500, e.what());
  }
  auto bytes = std::make_shared<const std::string>(png.begin(), png.end());
  {
    std::unique_lock lock(cache_mutex_);
    render_cache_.emplace(key, bytes);
  }
  return {200, "image/png", *bytes};
}

HttpResponse Service::brush(const std::string& body) const {
  const auto snap = snapshot();
  if (!snap) return not_loaded();
  try {
    const Json doc = Json::parse(body);
    if (!doc.is_object()) throw SchemaError("body: expected an object");
    bool scaling = snap->params.transform.scaling_enabled;
    const Json* region_doc = nullptr;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (it.key() == "region") {
        region_doc = &it.value();
      } else if (it.key() == "scaling") {
        if (!it.value().is_boolean()) throw SchemaError("body.scaling: expected true or false");
        scaling = it.value().get<bool>();
      } else {
        throw SchemaError("body: unknown key '" + it.key() + "'");
      }
    }
    if (!region_doc) throw SchemaError("body: missing required key 'region'");
    const BrushRegion region = parse_region(*region_doc, "body.region");
    TransformConfig cfg = snap->params.transform;
    cfg.scaling_enabled = scaling;
    const auto& l = snap->params.layout;
    const Selection sel = brush_select(snap->data, region, cfg, {-0.5, 1.5, l.v_lo, l.v_hi});
    return json_response(200, to_json(sel));
  } catch (const Json::parse_error& e) {
    return error(400, std::string("invalid JSON: ") + e.what());
  } catch (const SchemaError& e) {
    return error(400, e.what());
  } catch (const InvalidArgument& e) {
    return error(400, e.what());
  }
}

HttpResponse Service::curves(const QueryParams& query) const {
  const auto snap = snapshot();
  if (!snap) return not_loaded();
  std::size_t pair = 0;
  const auto* pv = query_value(query, "pair");
  if (!pv || !parse_index(*pv, pair) || pair >= snap->data.pairs()) return error(400, "invalid pair");
  TransformConfig cfg = snap->params.transform;
  if (const auto* s = query_value(query, "scaling")) {
    if (*s != "true" && *s != "false") return error(400, "scaling must be true or false");
    cfg.scaling_enabled = *s == "true";
  }
  std::vector<std::size_t> ids;
  if (const auto* iv = query_value(query, "ids"); iv && !iv->empty()) {
    if (static_cast<std::size_t>(std::count(iv->begin(), iv->end(), ',')) >= kMaxCurveIds) {
      return error(413, "at most 10000 ids per request");
    }
    std::size_t start = 0;
    while (start <= iv->size()) {
      const std::size_t comma = std::min(iv->find(',', start), iv->size());
      std::size_t id = 0;
      if (!parse_index(iv->substr(start, comma - start), id)) return error(400, "ids must be comma-separated integers");
      if (id >= snap->data.rows()) return error(400, "record id out of range");
      ids.push_back(id);
      start = comma + 1;
    }
  }
  const CurveSampler sampler(cfg);
  Json curves = Json::array();
  for (std::size_t id : ids) {
    const CartesianPoint2 p{snap->data.data.at(id, pair), snap->data.data.at(id, pair + 1)};
    Json samples = Json::array();
    for (std::size_t i = 0; i < sampler.size(); ++i) samples.push_back({sampler.u()[i], sampler.v(i, p)});
    curves.push_back({{"id", id}, {"samples", std::move(samples)}});
  }
  return json_response(200, {{"pair", pair}, {"curves", std::move(curves)}});
}

httplib::Server& Service::http() {
  if (server_) return *server_;
  server_ = std::make_unique<httplib::Server>();
  auto& s = *server_;
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                         {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                         {"Access-Control-Allow-Headers", "Content-Type"}});
  auto send = [](httplib::Response& res, const HttpResponse& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  auto params = [](const httplib::Request& req) {
    QueryParams q;
    for (const auto& [k, v] : req.params) q.emplace(k, v);
    return q;
  };
  s.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  s.Get("/api/dataset/meta", [this, send](const httplib::Request&, httplib::Response& res) { send(res, meta()); });
  s.Post("/api/render", [this, send, params](const httplib::Request& req, httplib::Response& res) {
    send(res, render(req.body, params(req)));
  });
  s.Post("/api/brush",
         [this, send](const httplib::Request& req, httplib::Response& res) { send(res, brush(req.body)); });
  s.Get("/api/curves", [this, send, params](const httplib::Request& req, httplib::Response& res) {
    send(res, curves(params(req)));
  });
  return s;
}

bool Service::listen(const std::string& host, int port) { return http().listen(host, port); }

int Service::bind(const std::string& host, int port) {
  if (port == 0) return http().bind_to_any_port(host);
  return http().bind_to_port(host, port) ? port : -1;
}

bool Service::listen_after_bind() { return http().listen_after_bind(); }

void Service::stop() {
  if (server_) server_->stop();
}

}  // namespace aupc
