#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grasp/property_graph.hpp"

namespace grasp::testing {

std::string source_path(const std::string& relative);

/// The 25-vertex social network used throughout the tests.
PropertyGraph running_example();

/// Dense id of the vertex whose `name` property equals `name` (e.g. "P3").
VertexId vertex_named(const PropertyGraph& g, const std::string& name);

/// Seeded random multigraph: up to `max_vertices` vertices, edge labels drawn
/// from l0..l<max_labels-1>, integer `age` on roughly half the vertices.
PropertyGraph random_graph(std::uint64_t seed, std::size_t max_vertices = 200,
                           std::size_t max_labels = 10);

// Brute-force references. They share no code with the library's engines.

std::int64_t brute_label_count(const PropertyGraph& g, const std::string& label);

/// Ordered pairs (u, v) with a path of one or more `label` edges, by
/// Warshall closure over an adjacency matrix.
std::int64_t brute_plus_pairs(const PropertyGraph& g, const std::string& label);

/// Ordered pairs of distinct edges (e1, e2) labeled l1, l2 whose chosen
/// endpoints coincide. `end1`/`end2` select the source (true) or target.
std::int64_t brute_edge_pairs(const PropertyGraph& g, const std::string& l1, bool end1_is_source,
                              const std::string& l2, bool end2_is_source);

}  // namespace grasp::testing
