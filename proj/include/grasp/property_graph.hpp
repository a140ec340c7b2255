#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "grasp/label.hpp"

namespace grasp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using LabelId = std::uint32_t;

/// The undefined term.
struct Undefined {
  friend bool operator==(Undefined, Undefined) { return true; }
};

using PropertyValue = std::variant<Undefined, std::int64_t, double, std::string>;
using PropertyMap = std::map<std::string, PropertyValue>;

/// Numeric view of a property value; nullopt for undefined, throws QueryError for text.
std::optional<double> numeric_value(const PropertyValue& value, const std::string& name);

struct Vertex {
  VertexId id = 0;
  Label type;
  PropertyMap properties;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Directed labeled edge. `src` is endpoint 1, `dst` endpoint 2.
struct Edge {
  EdgeId id = 0;
  VertexId src = 0;
  LabelId label = 0;
  VertexId dst = 0;
  PropertyMap properties;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable directed multigraph with typed vertices and labeled edges.
/// Vertex ids are dense; the external id each vertex was loaded with is kept
/// alongside. Edge label ids index `labels()`, which is sorted ascending.
class PropertyGraph {
 public:
  class Builder;

  PropertyGraph() = default;

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const EdgeId> out_edges(VertexId v) const;
  std::span<const EdgeId> in_edges(VertexId v) const;
  std::span<const EdgeId> edges_with_label(LabelId l) const;

  /// Λ(G): the distinct edge labels, ascending.
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const Label& label(LabelId l) const { return labels_.at(l); }
  const Label& edge_label(EdgeId e) const { return labels_.at(edges_.at(e).label); }
  std::optional<LabelId> find_label(const Label& l) const;

  std::uint64_t external_id(VertexId v) const { return external_ids_.at(v); }
  std::optional<VertexId> find_vertex(std::uint64_t external_id) const;

  /// Checks that every edge sits exactly once in the out-index of its source,
  /// the in-index of its target and the index of its label.
  bool audit() const;

  friend bool operator==(const PropertyGraph& a, const PropertyGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.labels_ == b.labels_ &&
           a.external_ids_ == b.external_ids_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Label> labels_;
  std::vector<std::uint64_t> external_ids_;
  std::unordered_map<std::uint64_t, VertexId> by_external_;

  // CSR-style indexes.
  std::vector<std::size_t> out_offsets_, in_offsets_, label_offsets_;
  std::vector<EdgeId> out_index_, in_index_, label_index_;

  void build_indexes();
};

class PropertyGraph::Builder {
 public:
  /// Adds a vertex; the external id defaults to the dense id. Throws InputError
  /// on a duplicate external id.
  VertexId add_vertex(Label type, PropertyMap properties = {},
                      std::optional<std::uint64_t> external_id = std::nullopt);

  /// Adds an edge between two already added vertices (dense ids).
  EdgeId add_edge(VertexId src, Label label, VertexId dst, PropertyMap properties = {});

  std::optional<VertexId> find_external(std::uint64_t external_id) const;
  std::size_t vertex_count() const noexcept { return vertices_.size(); }

  PropertyGraph build() &&;

 private:
  struct PendingEdge {
    VertexId src;
    Label label;
    VertexId dst;
    PropertyMap properties;
  };
  std::vector<Vertex> vertices_;
  std::vector<std::uint64_t> external_ids_;
  std::unordered_map<std::uint64_t, VertexId> by_external_;
  std::vector<PendingEdge> edges_;
};

struct LabelCount {
  Label label;
  std::size_t count = 0;

  friend bool operator==(const LabelCount&, const LabelCount&) = default;
};

/// Edge labels by non-increasing occurrence count; ties ascend lexicographically.
using FrequencyList = std::vector<LabelCount>;

FrequencyList label_frequencies(const PropertyGraph& g);

}  // namespace grasp
