#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include <json.hpp>

#include "grasp/metrics.hpp"
#include "grasp/property_graph.hpp"
#include "grasp/summary.hpp"

namespace grasp::service {

struct GraphSnapshot {
  std::string id;
  PropertyGraph graph;
  std::string digest;
};

struct SummarySnapshot {
  std::string id;
  std::string graph_id;
  Summary summary;
  std::optional<CompressionRatios> compression;  // absent for an empty graph
  double construction_us = 0;
};

/// Ids are `g<n>` and `s<n>` with n increasing across both kinds; never reused.
/// With a persistence directory every insertion is written through as canonical
/// JSON and existing files are reloaded on construction.
class SnapshotRegistry {
 public:
  explicit SnapshotRegistry(std::optional<std::filesystem::path> dir = std::nullopt);

  std::shared_ptr<const GraphSnapshot> add_graph(PropertyGraph g);
  std::shared_ptr<const SummarySnapshot> add_summary(std::string graph_id, Summary s,
                                                     std::optional<CompressionRatios> cr,
                                                     double construction_us);

  std::shared_ptr<const GraphSnapshot> graph(const std::string& id) const;
  std::shared_ptr<const SummarySnapshot> summary(const std::string& id) const;

  std::size_t graph_count() const;
  std::size_t summary_count() const;

 private:
  std::optional<std::filesystem::path> dir_;
  mutable std::shared_mutex mutex_;
  std::uint64_t next_ = 1;
  std::map<std::string, std::shared_ptr<const GraphSnapshot>> graphs_;
  std::map<std::string, std::shared_ptr<const SummarySnapshot>> summaries_;

  void reload();
  std::string next_id(char kind);
};

struct Response {
  int status = 200;
  std::string body;  // JSON
};

struct ServiceOptions {
  std::optional<std::filesystem::path> persistence_dir;
  std::size_t max_vertices = 0;  // 0: unlimited
};

/// Endpoint logic without sockets. Every body is JSON; errors are
/// `{"error": kind, "message": text}`.
class ServiceCore {
 public:
  explicit ServiceCore(ServiceOptions options = {});

  /// POST /graphs. Body is empty, the JSON graph mirror, or
  /// `{"nodes_csv": text, "edges_csv": text}`.
  Response post_graph(const std::string& body);
  /// GET /graphs/{id}/stats
  Response graph_stats(const std::string& id) const;
  /// POST /graphs/{id}/summaries. `labels` is comma separated, empty for all.
  Response post_summary(const std::string& graph_id, const std::string& labels,
                        const std::string& mode);
  /// GET /summaries/{id}/treemap
  Response treemap(const std::string& id) const;
  /// POST /summaries/{id}/query. Body: `{"query", "region"?, "compare_exact"?, "node_estimate"?}`.
  Response query(const std::string& id, const std::string& body) const;

  SnapshotRegistry& registry() { return registry_; }

 private:
  ServiceOptions options_;
  SnapshotRegistry registry_;
};

/// HTTP binding of a ServiceCore.
class HttpServer {
 public:
  explicit HttpServer(ServiceCore& core);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free one. Returns the bound port.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Serves `core` on host:port until the process stops.
void serve(ServiceCore& core, const std::string& host, int port);

}  // namespace grasp::service
