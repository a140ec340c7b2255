#include "grasp/metrics.hpp"

#include <algorithm>

#include "grasp/errors.hpp"

namespace grasp {

double relative_error(double exact, double approx) {
  const auto hi = std::max(exact, approx);
  if (hi == 0) return 0;
  return 100.0 * (1.0 - std::min(exact, approx) / hi);
}

TimeGain time_gain(double t_exact, double t_approx) {
  const auto hi = std::max(t_exact, t_approx);
  if (hi == 0) return {0, true};
  return {100.0 * (t_exact - t_approx) / hi, false};
}

namespace {

CompressionRatios ratios(double vertices, double edges, double hypernodes, double hyperedges) {
  if (vertices == 0) throw InputError("compression ratio of an empty graph is undefined");
  CompressionRatios r;
  r.vertex = (1.0 - hypernodes / vertices) * 100.0;
  r.edge = edges == 0 ? 0.0 : (1.0 - hyperedges / edges) * 100.0;
  return r;
}

}  // namespace

CompressionRatios compression_ratios(const PropertyGraph& g, const Summary& s) {
  return ratios(static_cast<double>(g.vertex_count()), static_cast<double>(g.edge_count()),
                static_cast<double>(s.hypernodes.size()), static_cast<double>(s.hyperedges.size()));
}

CompressionRatios compression_ratios(const Summary& s) {
  return ratios(static_cast<double>(s.total_vweight()),
                static_cast<double>(s.total_eweight() + s.total_hyperedge_weight()),
                static_cast<double>(s.hypernodes.size()), static_cast<double>(s.hyperedges.size()));
}

}  // namespace grasp
