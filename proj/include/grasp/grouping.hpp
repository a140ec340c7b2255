#pragma once

#include <cstddef>
#include <vector>

#include "grasp/property_graph.hpp"

namespace grasp {

/// One maximal weakly label-connected component.
struct Subgrouping {
  std::vector<VertexId> vertices;   // ascending
  std::vector<EdgeId> inner_edges;  // every edge with both endpoints inside, ascending
  Label dominant_label;
};

struct Grouping {
  Label label;
  std::vector<Subgrouping> subgroupings;
};

/// Label-driven partitioning: one grouping per label (in frequency order) that
/// captured at least one vertex, plus the residual vertices nobody captured.
struct Partitioning {
  std::vector<Grouping> groupings;
  std::vector<VertexId> residual;  // ascending, possibly empty

  /// Number of non-empty groupings including the residual one.
  std::size_t size() const noexcept { return groupings.size() + (residual.empty() ? 0 : 1); }
};

/// Connected components (directions ignored) of the `l`-labeled edges whose
/// endpoints are both available. Components are ordered by smallest vertex id.
/// `available` has one flag per vertex.
std::vector<Subgrouping> max_weak_label_components(const PropertyGraph& g, const Label& l,
                                                   const std::vector<bool>& available);

Partitioning grouping(const PropertyGraph& g);

}  // namespace grasp
