#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "aupc/app/pipeline.hpp"
#include "aupc/app/spec.hpp"

namespace httplib {
class Server;
}

namespace aupc {

// Immutable state served by one process.
struct SessionSnapshot {
  NormalizedDataset data;
  std::vector<std::string> axis_order;  // attribute names in plot order
  RenderParams params;                  // defaults for requests
  std::vector<PairDensityField> fields;  // for params.transform / layout
  std::string config_hash;

  static std::shared_ptr<const SessionSnapshot> build(NormalizedDataset data, RenderParams params);
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

using QueryParams = std::multimap<std::string, std::string>;

// Request handlers over a snapshot. Thread-safe; no handler mutates the
// snapshot.
class Service {
 public:
  Service();
  ~Service();

  void load(std::shared_ptr<const SessionSnapshot> snapshot);
  bool loaded() const;

  HttpResponse meta() const;
  HttpResponse render(const std::string& body, const QueryParams& query);
  HttpResponse brush(const std::string& body) const;
  HttpResponse curves(const QueryParams& query) const;

  // Binds routes to an httplib server owned by this object.
  httplib::Server& http();
  bool listen(const std::string& host, int port);
  // Binds without serving yet; port 0 picks a free port. Returns the bound
  // port or -1.
  int bind(const std::string& host, int port);
  bool listen_after_bind();
  void stop();

  std::size_t cache_size() const;

  static constexpr std::size_t kMaxCurveIds = 10000;

 private:
  std::shared_ptr<const SessionSnapshot> snapshot() const;
  std::shared_ptr<const std::vector<PairDensityField>> fields_for(const SessionSnapshot& snap,
                                                                const RenderParams& p);

  mutable std::shared_mutex snapshot_mutex_;
  std::shared_ptr<const SessionSnapshot> snapshot_;

  mutable std::shared_mutex cache_mutex_;
  std::map<std::string, std::shared_ptr<const std::string>> render_cache_;

  std::mutex fields_mutex_;
  std::map<std::string, std::shared_ptr<const std::vector<PairDensityField>>> field_cache_;

  std::unique_ptr<httplib::Server> server_;
};

// Hex digest of a string (FNV-1a 64).
std::string digest(const std::string& text);

}  // namespace aupc
