#include "grasp/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "grasp/errors.hpp"
#include "grasp/summary_io.hpp"

namespace grasp {

namespace {

using Clock = std::chrono::steady_clock;

// Mean duration in microseconds over runs 2..n.
template <class F>
double timed(std::size_t repetitions, F&& run) {
  const auto n = std::max<std::size_t>(repetitions, 1);
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto start = Clock::now();
    run();
    const std::chrono::duration<double, std::micro> took = Clock::now() - start;
    if (i > 0 || n == 1) total += took.count();
  }
  return n == 1 ? total : total / static_cast<double>(n - 1);
}

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

MetricsReport run_experiment(const PropertyGraph& g, const LabelSet& labels, HeuristicMode mode,
                             const std::vector<std::string>& queries,
                             const ExperimentOptions& options) {
  MetricsReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.labels = g.labels().size();
  r.mode = mode;
  r.node_estimate = options.node_estimate;
  r.timings = options.timings;

  Summary s;
  const auto start = Clock::now();
  s = grasp(g, labels, mode);
  const std::chrono::duration<double, std::micro> sct = Clock::now() - start;
  r.construction_us = options.timings ? sct.count() : 0;
  r.query_labels = s.query_labels;
  r.hypernodes = s.hypernodes.size();
  r.hyperedges = s.hyperedges.size();
  r.compression = compression_ratios(g, s);

  const auto reps = options.timings ? options.repetitions : 1;
  for (const auto& text : queries) {
    const auto q = parse_query(text);
    QueryRow row;
    row.query = print_query(q);
    row.form = form_name(q.path);

    double value = 0;
    const auto exact_us = timed(reps, [&] { value = eval_exact(g, q).value; });
    row.exact = value;

    std::optional<double> estimate;
    double approx_us = 0;
    try {
      approx_us = timed(reps, [&] {
        const auto plan = translate(q, options.node_estimate);
        estimate = eval_approx(s, plan).value;
      });
    } catch (const UnsupportedFeature& e) {
      row.note = e.what();
    }
    row.estimate = estimate;
    if (estimate) row.relative_error = relative_error(row.exact, *estimate);
    if (options.timings) {
      row.exact_us = exact_us;
      if (estimate) {
        row.approx_us = approx_us;
        row.gain = time_gain(exact_us, approx_us);
      }
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

FormSummary summarize_rows(const MetricsReport& r, const std::string& form) {
  FormSummary out;
  double err = 0, gain = 0;
  for (const auto& row : r.rows) {
    if (!form.empty() && row.form != form) continue;
    if (!row.relative_error) continue;
    ++out.queries;
    err += *row.relative_error;
    gain += row.gain.percent;
  }
  if (out.queries > 0) {
    out.mean_relative_error = err / static_cast<double>(out.queries);
    out.mean_time_gain = gain / static_cast<double>(out.queries);
  }
  return out;
}

nlohmann::json report_to_json(const MetricsReport& r) {
  using nlohmann::json;
  json j;
  j["graph"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"labels", r.labels}};
  j["mode"] = to_string(r.mode);
  j["node_estimate"] = to_string(r.node_estimate);
  j["query_labels"] = json::array();
  for (const auto& l : r.query_labels) j["query_labels"].push_back(l.str());
  j["summary"] = {{"hypernodes", r.hypernodes},
                  {"hyperedges", r.hyperedges},
                  {"vertex_cr", round_significant(r.compression.vertex)},
                  {"edge_cr", round_significant(r.compression.edge)}};
  if (r.timings) j["summary"]["construction_us"] = round_significant(r.construction_us);

  j["queries"] = json::array();
  std::set<std::string> forms;
  for (const auto& row : r.rows) {
    forms.insert(row.form);
    json q = {{"query", row.query}, {"form", row.form}, {"exact", round_significant(row.exact)}};
    q["estimate"] = row.estimate ? json(round_significant(*row.estimate)) : json(nullptr);
    q["relative_error"] =
        row.relative_error ? json(round_significant(*row.relative_error)) : json(nullptr);
    if (!row.note.empty()) q["note"] = row.note;
    if (r.timings) {
      q["exact_us"] = round_significant(row.exact_us);
      q["approx_us"] = round_significant(row.approx_us);
      q["time_gain"] = round_significant(row.gain.percent);
      if (row.gain.undefined) q["time_gain_undefined"] = true;
    }
    j["queries"].push_back(std::move(q));
  }

  auto aggregate = [&](const std::string& form) {
    const auto f = summarize_rows(r, form);
    json a = {{"queries", f.queries},
              {"mean_relative_error", round_significant(f.mean_relative_error)}};
    if (r.timings) a["mean_time_gain"] = round_significant(f.mean_time_gain);
    return a;
  };
  j["by_form"] = json::object();
  for (const auto& f : forms) j["by_form"][f] = aggregate(f);
  j["overall"] = aggregate("");
  return j;
}

std::string report_to_csv(const MetricsReport& r) {
  std::ostringstream out;
  out << "query,form,exact,estimate,relative_error,exact_us,approx_us,time_gain\n";
  for (const auto& row : r.rows) {
    out << csv_quote(row.query) << ',' << row.form << ',' << csv_number(row.exact) << ','
        << (row.estimate ? csv_number(*row.estimate) : "") << ','
        << (row.relative_error ? csv_number(*row.relative_error) : "") << ','
        << csv_number(row.exact_us) << ',' << csv_number(row.approx_us) << ','
        << csv_number(row.gain.percent) << '\n';
  }
  return out.str();
}

}  // namespace grasp
