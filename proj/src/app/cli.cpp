#include "aupc/app/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <pthread.h>
#include <thread>

#include "aupc/app/pipeline.hpp"
#include "aupc/app/spec.hpp"
#include "aupc/core/error.hpp"
#include "aupc/data/synthetic.hpp"
#include "aupc/render/png.hpp"
#include "aupc/service/service.hpp"

namespace aupc {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string spec;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string labels;
  std::string host = "127.0.0.1";
  int port = 8080;
  bool verbose = false;
};

class Log {
 public:
  explicit Log(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  void operator()(const std::string& msg) const {
    if (!on_) return;
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::fprintf(stderr, "[%8.3fs] %s\n", t, msg.c_str());
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

void write_text(const fs::path& path, const std::string& text) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

int cmd_synth(const Options& opt, const Log& log) {
  const SyntheticSpec spec = opt.spec.empty() ? default_synthetic_spec() : load_synthetic_spec(opt.spec);
  if (opt.out.empty()) throw InvalidArgument("synth needs --out PATH");
  const SyntheticData syn = generate_synthetic(spec, opt.seed.value_or(1));
  write_csv(syn.data, opt.out);
  log("wrote " + std::to_string(syn.data.rows()) + " rows to " + opt.out);
  if (!opt.labels.empty()) {
    std::string text = "structure,segment\n";
    for (std::size_t i = 0; i < syn.structure.size(); ++i) {
      text += std::to_string(syn.structure[i]) + "," + std::to_string(syn.segment[i]) + "\n";
    }
    write_text(opt.labels, text);
  }
  return kExitOk;
}

RenderSpec load_spec(const Options& opt) {
  if (opt.spec.empty()) throw InvalidArgument("--spec PATH is required");
  RenderSpec spec = load_render_spec(opt.spec);
  if (opt.seed) spec.params.seed = *opt.seed;
  return spec;
}

fs::path sibling(const fs::path& p, const std::string& suffix) {
  return p.parent_path() / (p.stem().string() + suffix);
}

int cmd_render(const Options& opt, const Log& log) {
  RenderSpec spec = load_spec(opt);
  if (!opt.out.empty()) spec.output.image = opt.out;
  if (!spec.output.image) throw SchemaError("spec.output: 'image' is required for render (or pass --out)");
  const PreparedData prep = prepare_dataset(spec);
  log("loaded " + std::to_string(prep.report.rows_read) + " rows, dropped " +
      std::to_string(prep.report.rows_dropped));
  const RenderResult r = render(prep.data, spec.params);
  log("rendered " + std::to_string(r.image.width()) + "x" + std::to_string(r.image.height()));
  export_png(r.image, *spec.output.image);
  if (spec.output.curve_layer) export_png(r.curve, *spec.output.curve_layer);
  if (spec.output.density_layers) {
    for (std::size_t i = 0; i < r.density.size(); ++i) export_png(r.density[i], fill_pair(*spec.output.density_layers, i));
  }
  if (!r.masks.empty()) {
    const std::string pattern =
        spec.output.masks.value_or(sibling(*spec.output.image, "_mask_{pair}.png").string());
    for (std::size_t i = 0; i < r.masks.size(); ++i) export_gray_png(r.masks[i], fill_pair(pattern, i));
  }
  log("wrote " + spec.output.image->string());
  return kExitOk;
}

int cmd_brush(const Options& opt, const Log& log) {
  RenderSpec spec = load_spec(opt);
  if (!opt.out.empty()) spec.output.selections = opt.out;
  if (!spec.output.selections) throw SchemaError("spec.output: 'selections' is required for brush (or pass --out)");
  if (spec.brushes.empty()) throw SchemaError("spec: 'brushes' must list at least one region");
  const PreparedData prep = prepare_dataset(spec);
  const auto& l = spec.params.layout;
  const PlotExtent extent{-0.5, 1.5, l.v_lo, l.v_hi};
  std::vector<Selection> selections;
  for (std::size_t i = 0; i < spec.brushes.size(); ++i) {
    try {
      validate_region(spec.brushes[i], prep.data.pairs(), extent);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("brushes[" + std::to_string(i) + "]: " + e.what());
    }
    selections.push_back(brush_select(prep.data, spec.brushes[i], spec.params.transform, extent));
    log("brushes[" + std::to_string(i) + "]: " + std::to_string(selections.back().record_ids.size()) + " records");
  }
  Json doc = Json::array();
  for (const auto& s : selections) doc.push_back(to_json(s));
  write_text(*spec.output.selections, doc.dump(2) + "\n");
  const fs::path overlay = spec.output.overlay.value_or(sibling(*spec.output.selections, "_overlay.png"));
  const RenderResult r = render(prep.data, spec.params);
  export_png(brush_overlay(prep.data, spec.params, r.image, selections), overlay);
  log("wrote " + spec.output.selections->string() + " and " + overlay.string());
  return kExitOk;
}

int cmd_serve(const Options& opt, const Log& log) {
  const RenderSpec spec = load_spec(opt);
  PreparedData prep = prepare_dataset(spec);
  Service service;
  service.load(SessionSnapshot::build(std::move(prep.data), spec.params));
  log("snapshot ready");

  // SIGTERM / SIGINT are taken by a waiter thread that stops the server.
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGTERM);
  sigaddset(&set, SIGINT);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);

  const int port = service.bind(opt.host, opt.port);
  if (port < 0) throw IoError("cannot bind " + opt.host + ":" + std::to_string(opt.port));
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&set, &sig);
    log("signal " + std::to_string(sig) + ", shutting down");
    service.stop();
  });
  std::fprintf(stderr, "listening on %s:%d\n", opt.host.c_str(), port);
  std::fflush(stderr);
  const bool ok = service.listen_after_bind();
  if (waiter.joinable()) {
    // Wake the waiter if the server stopped on its own.
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
  }
  return ok ? kExitOk : kExitIo;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Angle-uniform parallel coordinates: synthesis, rendering, brushing and serving"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--verbose,-v", opt.verbose, "log progress to stderr");

  auto* synth = app.add_subcommand("synth", "write the synthetic line-cluster dataset as CSV");
  synth->add_option("--spec", opt.spec, "synthetic spec JSON (default: built-in twelve segments)");
  synth->add_option("--seed", opt.seed, "random seed");
  synth->add_option("--out", opt.out, "output CSV")->required();
  synth->add_option("--labels", opt.labels, "optional CSV of per-row structure and segment ids");

  auto* render = app.add_subcommand("render", "render the final image and optional layers");
  render->add_option("--spec", opt.spec, "render spec JSON")->required();
  render->add_option("--seed", opt.seed, "override the render spec seed");
  render->add_option("--out", opt.out, "override output.image");

  auto* brush = app.add_subcommand("brush", "select records with the render spec's brush regions");
  brush->add_option("--spec", opt.spec, "render spec JSON with brushes")->required();
  brush->add_option("--seed", opt.seed, "override the render spec seed");
  brush->add_option("--out", opt.out, "override output.selections");

  auto* serve = app.add_subcommand("serve", "serve the HTTP API over the render spec's dataset");
  serve->add_option("--spec", opt.spec, "render spec JSON")->required();
  serve->add_option("--seed", opt.seed, "override the render spec seed");
  serve->add_option("--port", opt.port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", opt.host, "bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFailure;
  }

  const Log log(opt.verbose);
  try {
    if (*synth) return cmd_synth(opt, log);
    if (*render) return cmd_render(opt, log);
    if (*brush) return cmd_brush(opt, log);
    return cmd_serve(opt, log);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NumericalLimitError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const LimitCaseError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace aupc
