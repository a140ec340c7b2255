#include "grasp/service.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>

#include "grasp/errors.hpp"
#include "grasp/exact.hpp"
#include "grasp/graph_io.hpp"
#include "grasp/query.hpp"
#include "grasp/summary_io.hpp"
#include "grasp/translate.hpp"
#include "grasp/treemap.hpp"

namespace grasp::service {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

void write_atomically(const fs::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
  }
  fs::rename(tmp, path);
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::optional<std::uint64_t> id_number(const std::string& id, char kind) {
  if (id.size() < 2 || id[0] != kind) return std::nullopt;
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9') return std::nullopt;
    n = n * 10 + static_cast<std::uint64_t>(id[i] - '0');
  }
  return n;
}

std::optional<CompressionRatios> ratios_or_none(const PropertyGraph* g, const Summary& s) {
  try {
    return g ? compression_ratios(*g, s) : compression_ratios(s);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

Response ok(int status, const json& body) { return {status, dump_canonical(body)}; }

Response fail(int status, const std::string& kind, const std::string& message) {
  return ok(status, json{{"error", kind}, {"message", message}});
}

Response not_found(const std::string& what, const std::string& id) {
  return fail(404, "not_found", "unknown " + what + " " + id);
}

json ratios_json(const std::optional<CompressionRatios>& cr) {
  if (!cr) return {{"vertex_cr", nullptr}, {"edge_cr", nullptr}};
  return {{"vertex_cr", round_significant(cr->vertex)}, {"edge_cr", round_significant(cr->edge)}};
}

}  // namespace

SnapshotRegistry::SnapshotRegistry(std::optional<fs::path> dir) : dir_(std::move(dir)) {
  if (dir_) {
    fs::create_directories(*dir_);
    reload();
  }
}

std::string SnapshotRegistry::next_id(char kind) { return kind + std::to_string(next_++); }

void SnapshotRegistry::reload() {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(*dir_))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<json> summary_docs;
  for (const auto& path : files) {
    const auto stem = path.stem().string();
    if (auto n = id_number(stem, 'g')) {
      auto snap = std::make_shared<GraphSnapshot>();
      snap->id = stem;
      snap->graph = load_graph_json(read_json_file(path));
      snap->digest = graph_digest(snap->graph);
      graphs_[stem] = std::move(snap);
      next_ = std::max(next_, *n + 1);
    } else if (auto m = id_number(stem, 's')) {
      auto doc = read_json_file(path);
      doc["id"] = stem;
      summary_docs.push_back(std::move(doc));
      next_ = std::max(next_, *m + 1);
    }
  }
  for (const auto& doc : summary_docs) {
    auto snap = std::make_shared<SummarySnapshot>();
    snap->id = doc.at("id").get<std::string>();
    snap->graph_id = doc.value("graph_id", "");
    snap->summary = summary_from_json(doc.at("summary"));
    snap->construction_us = doc.value("construction_us", 0.0);
    auto g = graphs_.find(snap->graph_id);
    snap->compression =
        ratios_or_none(g == graphs_.end() ? nullptr : &g->second->graph, snap->summary);
    summaries_[snap->id] = std::move(snap);
  }
}

std::shared_ptr<const GraphSnapshot> SnapshotRegistry::add_graph(PropertyGraph g) {
  auto snap = std::make_shared<GraphSnapshot>();
  snap->graph = std::move(g);
  snap->digest = graph_digest(snap->graph);
  const auto text = dir_ ? dump_canonical(graph_to_json(snap->graph)) : std::string{};

  std::unique_lock lock(mutex_);
  snap->id = next_id('g');
  if (dir_) write_atomically(*dir_ / (snap->id + ".json"), text);
  graphs_[snap->id] = snap;
  return snap;
}

std::shared_ptr<const SummarySnapshot> SnapshotRegistry::add_summary(
    std::string graph_id, Summary s, std::optional<CompressionRatios> cr, double construction_us) {
  auto snap = std::make_shared<SummarySnapshot>();
  snap->graph_id = std::move(graph_id);
  snap->summary = std::move(s);
  snap->compression = cr;
  snap->construction_us = construction_us;
  std::string text;
  if (dir_) {
    text = dump_canonical(json{{"graph_id", snap->graph_id},
                               {"construction_us", round_significant(construction_us)},
                               {"summary", summary_to_json(snap->summary)}});
  }

  std::unique_lock lock(mutex_);
  snap->id = next_id('s');
  if (dir_) write_atomically(*dir_ / (snap->id + ".json"), text);
  summaries_[snap->id] = snap;
  return snap;
}

std::shared_ptr<const GraphSnapshot> SnapshotRegistry::graph(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = graphs_.find(id);
  return it == graphs_.end() ? nullptr : it->second;
}

std::shared_ptr<const SummarySnapshot> SnapshotRegistry::summary(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = summaries_.find(id);
  return it == summaries_.end() ? nullptr : it->second;
}

std::size_t SnapshotRegistry::graph_count() const {
  std::shared_lock lock(mutex_);
  return graphs_.size();
}

std::size_t SnapshotRegistry::summary_count() const {
  std::shared_lock lock(mutex_);
  return summaries_.size();
}

ServiceCore::ServiceCore(ServiceOptions options)
    : options_(std::move(options)), registry_(options_.persistence_dir) {}

Response ServiceCore::post_graph(const std::string& body) {
  PropertyGraph g;
  try {
    if (body.find_first_not_of(" \t\r\n") != std::string::npos) {
      json doc;
      try {
        doc = json::parse(body);
      } catch (const json::exception& e) {
        return fail(400, "input", std::string("body is not JSON: ") + e.what());
      }
      if (doc.is_object() && (doc.contains("nodes_csv") || doc.contains("edges_csv"))) {
        std::istringstream nodes(doc.value("nodes_csv", ""));
        std::istringstream edges(doc.value("edges_csv", ""));
        g = load_graph(nodes, edges);
      } else {
        g = load_graph_json(doc);
      }
    }
  } catch (const InputError& e) {
    return fail(400, "input", e.what());
  } catch (const json::exception& e) {
    return fail(400, "input", e.what());
  }
  if (options_.max_vertices > 0 && g.vertex_count() > options_.max_vertices)
    return fail(413, "too_large",
                "graph has " + std::to_string(g.vertex_count()) + " vertices, limit is " +
                    std::to_string(options_.max_vertices));

  auto snap = registry_.add_graph(std::move(g));
  return ok(201, json{{"id", snap->id},
                      {"vertices", snap->graph.vertex_count()},
                      {"edges", snap->graph.edge_count()}});
}

Response ServiceCore::graph_stats(const std::string& id) const {
  auto snap = registry_.graph(id);
  if (!snap) return not_found("graph", id);
  json labels = json::array();
  for (const auto& lc : label_frequencies(snap->graph))
    labels.push_back({{"label", lc.label.str()}, {"count", lc.count}});
  return ok(200, json{{"id", id},
                      {"vertices", snap->graph.vertex_count()},
                      {"edges", snap->graph.edge_count()},
                      {"digest", snap->digest},
                      {"labels", std::move(labels)}});
}

Response ServiceCore::post_summary(const std::string& graph_id, const std::string& labels,
                                   const std::string& mode_text) {
  auto g = registry_.graph(graph_id);
  if (!g) return not_found("graph", graph_id);
  HeuristicMode mode;
  LabelSet query_labels;
  try {
    mode = parse_mode(mode_text.empty() ? "target" : mode_text);
    std::istringstream in(labels);
    for (std::string part; std::getline(in, part, ',');) {
      const auto b = part.find_first_not_of(' ');
      if (b == std::string::npos) continue;
      const auto e = part.find_last_not_of(' ');
      const auto text = part.substr(b, e - b + 1);
      if (!Label::valid(text)) throw InputError("invalid label '" + text + "'");
      query_labels.insert(Label(text));
    }
  } catch (const InputError& e) {
    return fail(400, "input", e.what());
  }

  std::vector<std::string> warnings;
  const auto start = Clock::now();
  auto s = grasp(g->graph, query_labels, mode, &warnings);
  const std::chrono::duration<double, std::micro> sct = Clock::now() - start;
  const auto cr = ratios_or_none(&g->graph, s);
  auto snap = registry_.add_summary(graph_id, std::move(s), cr, sct.count());

  json body = ratios_json(cr);
  body["id"] = snap->id;
  body["graph_id"] = graph_id;
  body["mode"] = to_string(mode);
  body["hypernodes"] = snap->summary.hypernodes.size();
  body["hyperedges"] = snap->summary.hyperedges.size();
  body["construction_us"] = round_significant(snap->construction_us);
  body["warnings"] = warnings;
  return ok(201, body);
}

Response ServiceCore::treemap(const std::string& id) const {
  auto snap = registry_.summary(id);
  if (!snap) return not_found("summary", id);
  return ok(200, treemap_to_json(build_treemap(snap->summary)));
}

Response ServiceCore::query(const std::string& id, const std::string& body) const {
  auto snap = registry_.summary(id);
  if (!snap) return not_found("summary", id);

  json req;
  try {
    req = json::parse(body);
  } catch (const json::exception& e) {
    return fail(400, "input", std::string("body is not JSON: ") + e.what());
  }
  if (!req.is_object() || !req.contains("query") || !req["query"].is_string())
    return fail(400, "input", "body needs a string field 'query'");

  try {
    const auto q = parse_query(req["query"].get<std::string>());
    std::optional<std::vector<std::uint32_t>> region;
    if (req.contains("region") && !req["region"].is_null()) {
      if (!req["region"].is_array()) return fail(400, "input", "'region' must be an array");
      region.emplace();
      for (const auto& v : req["region"]) {
        if (!v.is_number_unsigned()) return fail(400, "input", "region ids are hypernode ids");
        region->push_back(v.get<std::uint32_t>());
      }
    }
    const auto estimate = parse_node_estimate(req.value("node_estimate", "exact"));

    const auto a0 = Clock::now();
    const auto plan = translate(q, estimate);
    const auto value = eval_approx(snap->summary, plan, region).value;
    const std::chrono::duration<double, std::micro> approx_us = Clock::now() - a0;

    json out = {{"query", print_query(q)},
                {"form", form_name(q.path)},
                {"value", round_significant(value)},
                {"region", region ? json(*region) : json(nullptr)}};
    json terms = json::array();
    for (const auto& t : plan.terms) terms.push_back(describe(t));
    out["plan"] = std::move(terms);

    if (req.value("compare_exact", false)) {
      auto g = registry_.graph(snap->graph_id);
      if (!g) {
        out["exact"] = nullptr;
        out["note"] = "source graph not retained";
      } else {
        const auto e0 = Clock::now();
        const auto exact = eval_exact(g->graph, q).value;
        const std::chrono::duration<double, std::micro> exact_us = Clock::now() - e0;
        const auto gain = time_gain(exact_us.count(), approx_us.count());
        out["exact"] = round_significant(exact);
        out["relative_error"] = round_significant(relative_error(exact, value));
        out["exact_us"] = round_significant(exact_us.count());
        out["approx_us"] = round_significant(approx_us.count());
        out["time_gain"] = round_significant(gain.percent);
      }
    }
    return ok(200, out);
  } catch (const SyntaxError& e) {
    auto r = ok(400, json{{"error", "syntax"}, {"message", e.what()}, {"offset", e.offset()}});
    return r;
  } catch (const UnsupportedFeature& e) {
    return fail(422, "unsupported", e.what());
  } catch (const QueryError& e) {
    return fail(400, "query", e.what());
  } catch (const InputError& e) {
    return fail(400, "input", e.what());
  }
}

}  // namespace grasp::service
