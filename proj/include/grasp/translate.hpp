#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grasp/exact.hpp"
#include "grasp/query.hpp"
#include "grasp/summary.hpp"

namespace grasp {

/// How the ε contribution (the node count) is estimated.
///   exact: Σ vweight, which equals |V| on a full region.
///   weighted: Σ avg_sn_vweight · vweight.
enum class NodeEstimate { exact, weighted };

NodeEstimate parse_node_estimate(std::string_view text);
std::string to_string(NodeEstimate mode);

/// Summed over the hypernodes of the region.
struct NodeAgg {
  enum class Expr {
    label_mass,    // lpercent(first) · eweight
    node_count,    // see NodeEstimate
    lreach,        // lreach(first), only where it is > 0
    min_percent,   // eweight · min(lpercent(first), lpercent(second))
    ereach,        // ereach(key)
  };
  Expr expr = Expr::label_mass;
  Label first;
  Label second;
  TraversalKey key;
  NodeEstimate estimate = NodeEstimate::exact;

  friend bool operator==(const NodeAgg&, const NodeAgg&) = default;
};

/// Summed over the region's hyperedges labeled `label`.
struct EdgeAgg {
  enum class Expr {
    weight,         // hyperedge weight
    rlpart_weight,  // endpoint.rlpart(key) · weight, where endpoint.lpercent(guard) > 0
  };
  Expr expr = Expr::weight;
  Label label;
  /// Which end of the hyperedge is read: incoming = its target, outgoing = its source.
  Incidence endpoint = Incidence::incoming;
  TraversalKey key;
  Label guard;

  friend bool operator==(const EdgeAgg&, const EdgeAgg&) = default;
};

using PlanTerm = std::variant<NodeAgg, EdgeAgg>;

struct TranslatedPlan {
  std::vector<PlanTerm> terms;
  friend bool operator==(const TranslatedPlan&, const TranslatedPlan&) = default;
};

/// Throws UnsupportedFeature for filtered queries.
TranslatedPlan translate(const CountQuery& q, NodeEstimate estimate = NodeEstimate::exact);

std::string describe(const PlanTerm& term);

/// Sums every term over the hypernodes in `region` (all when absent) and the
/// hyperedges with both endpoints in it. Throws QueryError for unknown ids.
CountResult eval_approx(const Summary& s, const TranslatedPlan& plan,
                        const std::optional<std::vector<std::uint32_t>>& region = std::nullopt);

/// Value of one term; useful for per-term breakdowns.
double eval_term(const Summary& s, const PlanTerm& term, const std::vector<bool>& in_region);

}  // namespace grasp
