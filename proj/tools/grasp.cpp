// grasp command line: summarize, query, bench, gen, schema, serve.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grasp/errors.hpp"
#include "grasp/exact.hpp"
#include "grasp/experiment.hpp"
#include "grasp/generator.hpp"
#include "grasp/graph_io.hpp"
#include "grasp/query.hpp"
#include "grasp/service.hpp"
#include "grasp/summary_io.hpp"
#include "grasp/translate.hpp"
#include "grasp/workload.hpp"

namespace {

using namespace grasp;
namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

LabelSet parse_labels(const std::string& csv) {
  LabelSet out;
  std::istringstream in(csv);
  for (std::string part; std::getline(in, part, ',');) {
    if (part.empty()) continue;
    if (!Label::valid(part)) throw InputError("invalid label '" + part + "'");
    out.insert(Label(part));
  }
  return out;
}

std::vector<std::uint32_t> parse_region(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::istringstream in(csv);
  for (std::string part; std::getline(in, part, ',');) {
    if (part.empty()) continue;
    char* end = nullptr;
    const auto v = std::strtoul(part.c_str(), &end, 10);
    if (*end != '\0') throw InputError("region ids are integers, got '" + part + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

GraphSchema resolve_schema(const std::string& name_or_path) {
  if (name_or_path == "bib") return bib_schema();
  if (name_or_path == "shop") return shop_schema();
  std::ifstream in(name_or_path);
  if (!in) throw InputError("cannot read schema " + name_or_path);
  return load_schema(in);
}

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Property-graph summarization and approximate counting queries"};
  app.require_subcommand(1);

  // summarize
  std::string graph_path, labels_csv, mode_text = "target", output;
  auto* summarize = app.add_subcommand("summarize", "Build a summary of a graph");
  summarize->add_option("graph", graph_path, "Graph (.json or CSV prefix)")->required();
  summarize->add_option("--labels", labels_csv, "Query labels, comma separated (default: all)");
  summarize->add_option("--mode", mode_text, "target or source");
  summarize->add_option("-o,--output", output, "Summary file (default: stdout)");

  // query
  std::string input_path, query_file, query_text, region_csv, estimate_text = "exact";
  bool use_exact = false, use_approx = false;
  auto* query = app.add_subcommand("query", "Evaluate counting queries");
  query->add_option("input", input_path, "Graph or summary")->required();
  auto* qf = query->add_option("--query-file", query_file, "One query per line");
  auto* qt = query->add_option("-q,--query", query_text, "A single query");
  qf->excludes(qt);
  query->add_option("--region", region_csv, "Hypernode ids, comma separated");
  auto* ex = query->add_flag("--exact", use_exact, "Brute-force evaluation on the graph");
  auto* ap = query->add_flag("--approx", use_approx, "Evaluation on the summary");
  ex->excludes(ap);
  query->add_option("--labels", labels_csv, "Query labels when summarizing a graph");
  query->add_option("--mode", mode_text, "Heuristic when summarizing a graph");
  query->add_option("--node-estimate", estimate_text, "exact or weighted");

  // bench
  std::string workload_path, queries_path, csv_path;
  std::size_t repetitions = 6;
  bool no_timings = false;
  auto* bench = app.add_subcommand("bench", "Compare exact and approximate evaluation");
  bench->add_option("graph", graph_path, "Graph (.json or CSV prefix)")->required();
  auto* wl = bench->add_option("--workload", workload_path, "Workload spec (JSON)");
  auto* ql = bench->add_option("--queries", queries_path, "Query file instead of a workload");
  wl->excludes(ql);
  bench->add_option("--mode", mode_text, "target or source");
  bench->add_option("--labels", labels_csv, "Query labels (default: all)");
  bench->add_option("--repetitions", repetitions, "Runs per query; the first is dropped")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--no-timings", no_timings, "Omit timings for reproducible output");
  bench->add_option("--node-estimate", estimate_text, "exact or weighted");
  bench->add_option("-o,--output", output, "Report JSON (default: stdout)");
  bench->add_option("--csv", csv_path, "Also write per-query rows as CSV");

  // gen
  std::string schema_arg, prefix;
  std::size_t size = 1000;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic graph");
  gen->add_option("--schema", schema_arg, "Schema file, or bib / shop")->required();
  gen->add_option("--size", size, "Vertex count");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--output", prefix, "Output prefix, or a .json file")->required();

  // schema
  std::string schema_name;
  auto* schema = app.add_subcommand("schema", "Print a built-in schema as JSON");
  schema->add_option("name", schema_name, "bib or shop")->required();

  // serve
  std::string listen = env_or("GRASP_LISTEN", "127.0.0.1:8080");
  std::string data_dir = env_or("GRASP_DATA_DIR", "");
  std::size_t max_vertices = std::strtoull(env_or("GRASP_MAX_VERTICES", "0").c_str(), nullptr, 10);
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--listen", listen, "host:port (env GRASP_LISTEN)");
  serve->add_option("--data-dir", data_dir, "Persistence directory (env GRASP_DATA_DIR)");
  serve->add_option("--max-vertices", max_vertices, "Largest accepted graph, 0 for no limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*summarize) {
      const auto g = load_graph_path(graph_path);
      std::vector<std::string> warnings;
      const auto s = grasp::grasp(g, parse_labels(labels_csv), parse_mode(mode_text), &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      write_output(output, dump_canonical(summary_to_json(s)));
      if (!output.empty() && output != "-")
        std::cerr << s.hypernodes.size() << " hypernodes, " << s.hyperedges.size()
                  << " hyperedges\n";
    } else if (*query) {
      std::vector<std::string> lines;
      if (!query_text.empty()) {
        lines.push_back(query_text);
      } else if (!query_file.empty()) {
        lines = read_query_lines(read_file(query_file));
      } else {
        throw InputError("give --query or --query-file");
      }

      std::optional<PropertyGraph> g;
      std::optional<Summary> s;
      const bool is_summary = fs::path(input_path).extension() == ".json" &&
                              looks_like_summary(nlohmann::json::parse(read_file(input_path),
                                                                       nullptr, false));
      if (is_summary) {
        if (use_exact) throw InputError("exact evaluation needs a graph, not a summary");
        s = load_summary(input_path);
      } else {
        g = load_graph_path(input_path);
        if (!use_exact) s = grasp::grasp(*g, parse_labels(labels_csv), parse_mode(mode_text));
      }
      if (use_exact && !region_csv.empty()) throw InputError("--region applies to --approx only");

      std::optional<std::vector<std::uint32_t>> region;
      if (!region_csv.empty()) region = parse_region(region_csv);
      const auto estimate = parse_node_estimate(estimate_text);
      for (const auto& line : lines) {
        const auto q = parse_query(line);
        const double v = use_exact ? eval_exact(*g, q).value
                                   : eval_approx(*s, translate(q, estimate), region).value;
        std::cout << format_value(v) << "\t" << print_query(q) << "\n";
      }
    } else if (*bench) {
      const auto g = load_graph_path(graph_path);
      std::vector<std::string> queries;
      if (!queries_path.empty()) {
        queries = read_query_lines(read_file(queries_path));
      } else if (!workload_path.empty()) {
        std::ifstream in(workload_path);
        if (!in) throw InputError("cannot read " + workload_path);
        queries = generate_workload(g, load_workload_spec(in));
      } else {
        throw InputError("give --workload or --queries");
      }
      ExperimentOptions opts;
      opts.repetitions = repetitions;
      opts.timings = !no_timings;
      opts.node_estimate = parse_node_estimate(estimate_text);
      const auto report =
          run_experiment(g, parse_labels(labels_csv), parse_mode(mode_text), queries, opts);
      write_output(output, dump_canonical(report_to_json(report)));
      if (!csv_path.empty()) write_output(csv_path, report_to_csv(report));
    } else if (*gen) {
      const auto g = generate_synthetic(resolve_schema(schema_arg), size, seed);
      if (fs::path(prefix).extension() == ".json") {
        write_output(prefix, dump_canonical(graph_to_json(g)));
      } else {
        save_graph_prefix(g, prefix);
      }
      std::cerr << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    } else if (*schema) {
      std::cout << dump_canonical(schema_to_json(resolve_schema(schema_name)));
    } else if (*serve) {
      const auto colon = listen.rfind(':');
      if (colon == std::string::npos) throw InputError("--listen expects host:port");
      const int port = std::atoi(listen.c_str() + colon + 1);
      service::ServiceOptions opts;
      if (!data_dir.empty()) opts.persistence_dir = data_dir;
      opts.max_vertices = max_vertices;
      service::ServiceCore core(opts);
      std::cerr << "listening on " << listen << "\n";
      service::serve(core, listen.substr(0, colon), port);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedFeature& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const QueryError& e) {
    std::cerr << "query error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
