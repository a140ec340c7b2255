#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grasp/metrics.hpp"
#include "grasp/summary.hpp"
#include "grasp/translate.hpp"

namespace grasp {

struct ExperimentOptions {
  /// Runs per query and engine; the first is a warm-up and is dropped.
  std::size_t repetitions = 6;
  /// Without timings the report is a pure function of its inputs.
  bool timings = true;
  NodeEstimate node_estimate = NodeEstimate::exact;
};

struct QueryRow {
  std::string query;
  std::string form;
  double exact = 0;
  std::optional<double> estimate;  // absent when the query has no translation
  std::optional<double> relative_error;
  double exact_us = 0;
  double approx_us = 0;
  TimeGain gain;
  std::string note;
};

struct MetricsReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t labels = 0;
  HeuristicMode mode = HeuristicMode::target;
  NodeEstimate node_estimate = NodeEstimate::exact;
  LabelSet query_labels;
  std::size_t hypernodes = 0;
  std::size_t hyperedges = 0;
  CompressionRatios compression;
  double construction_us = 0;
  bool timings = true;
  std::vector<QueryRow> rows;
};

/// Builds the summary (timed), then evaluates each query with both engines.
MetricsReport run_experiment(const PropertyGraph& g, const LabelSet& labels, HeuristicMode mode,
                             const std::vector<std::string>& queries,
                             const ExperimentOptions& options = {});

/// Mean relative error and time gain over rows of one form ("" for all rows).
struct FormSummary {
  std::size_t queries = 0;
  double mean_relative_error = 0;
  double mean_time_gain = 0;
};
FormSummary summarize_rows(const MetricsReport& r, const std::string& form = {});

nlohmann::json report_to_json(const MetricsReport& r);
std::string report_to_csv(const MetricsReport& r);

}  // namespace grasp
