#pragma once

#include "grasp/property_graph.hpp"
#include "grasp/query.hpp"

namespace grasp {

struct CountResult {
  double value = 0;
  bool exact = false;
};

/// Counts matches on the original graph.
///   single / inverse: edges with the label, with multiplicity
///   optional: single + |V|
///   plus: ordered pairs (u, v) joined by a path of one or more l-edges
///   star: plus + |V|
///   disjunction: single(l1) + single(l2)
///   concatenation: ordered pairs of distinct edges meeting at the middle vertex
///   epsilon: |V|
/// Filters keep matches whose bound vertex has a numeric property satisfying
/// every comparator; undefined or missing values never satisfy one.
/// Throws QueryError when a filter meets a text property.
CountResult eval_exact(const PropertyGraph& g, const CountQuery& q);

}  // namespace grasp
