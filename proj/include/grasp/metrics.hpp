#pragma once

#include "grasp/property_graph.hpp"
#include "grasp/summary.hpp"

namespace grasp {

/// 100 · (1 − min/max); 0 when both are 0.
double relative_error(double exact, double approx);

struct TimeGain {
  double percent = 0;
  bool undefined = false;  // both durations were zero
};

/// 100 · (t_exact − t_approx) / max(t_exact, t_approx).
TimeGain time_gain(double t_exact, double t_approx);

struct CompressionRatios {
  double vertex = 0;  // (1 − |hypernodes| / |V|) · 100
  double edge = 0;    // (1 − |hyperedges| / |E|) · 100, 0 for an edgeless graph
};

/// Throws InputError for a graph without vertices.
CompressionRatios compression_ratios(const PropertyGraph& g, const Summary& s);

/// Same figures from the summary alone: |V| = Σ vweight, |E| = Σ eweight + Σ weight.
CompressionRatios compression_ratios(const Summary& s);

}  // namespace grasp
