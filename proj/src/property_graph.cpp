#include "grasp/property_graph.hpp"

#include <algorithm>

#include "grasp/errors.hpp"

namespace grasp {

std::optional<double> numeric_value(const PropertyValue& value, const std::string& name) {
  if (std::holds_alternative<std::int64_t>(value)) {
    return static_cast<double>(std::get<std::int64_t>(value));
  }
  if (std::holds_alternative<double>(value)) return std::get<double>(value);
  if (std::holds_alternative<Undefined>(value)) return std::nullopt;
  throw QueryError("property '" + name + "' is not numeric");
}

std::span<const EdgeId> PropertyGraph::out_edges(VertexId v) const {
  return {out_index_.data() + out_offsets_.at(v), out_index_.data() + out_offsets_.at(v + 1)};
}

std::span<const EdgeId> PropertyGraph::in_edges(VertexId v) const {
  return {in_index_.data() + in_offsets_.at(v), in_index_.data() + in_offsets_.at(v + 1)};
}

std::span<const EdgeId> PropertyGraph::edges_with_label(LabelId l) const {
  return {label_index_.data() + label_offsets_.at(l),
          label_index_.data() + label_offsets_.at(l + 1)};
}

std::optional<LabelId> PropertyGraph::find_label(const Label& l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return std::nullopt;
  return static_cast<LabelId>(it - labels_.begin());
}

std::optional<VertexId> PropertyGraph::find_vertex(std::uint64_t external_id) const {
  auto it = by_external_.find(external_id);
  if (it == by_external_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Counting sort of edge ids by a key in [0, buckets).
template <typename Key>
void bucket_index(std::size_t buckets, const std::vector<Edge>& edges, Key key,
                  std::vector<std::size_t>& offsets, std::vector<EdgeId>& index) {
  offsets.assign(buckets + 1, 0);
  for (const auto& e : edges) ++offsets[key(e) + 1];
  for (std::size_t i = 0; i < buckets; ++i) offsets[i + 1] += offsets[i];
  index.assign(edges.size(), 0);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : edges) index[cursor[key(e)]++] = e.id;
}

}  // namespace

void PropertyGraph::build_indexes() {
  const std::size_t n = vertices_.size();
  bucket_index(n, edges_, [](const Edge& e) { return e.src; }, out_offsets_, out_index_);
  bucket_index(n, edges_, [](const Edge& e) { return e.dst; }, in_offsets_, in_index_);
  bucket_index(labels_.size(), edges_, [](const Edge& e) { return e.label; }, label_offsets_,
               label_index_);
}

bool PropertyGraph::audit() const {
  std::vector<int> out_seen(edges_.size(), 0), in_seen(edges_.size(), 0),
      label_seen(edges_.size(), 0);
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].id != v) return false;
    for (EdgeId e : out_edges(v)) {
      if (e >= edges_.size() || edges_[e].src != v) return false;
      ++out_seen[e];
    }
    for (EdgeId e : in_edges(v)) {
      if (e >= edges_.size() || edges_[e].dst != v) return false;
      ++in_seen[e];
    }
  }
  for (LabelId l = 0; l < labels_.size(); ++l) {
    if (edges_with_label(l).empty()) return false;
    for (EdgeId e : edges_with_label(l)) {
      if (e >= edges_.size() || edges_[e].label != l) return false;
      ++label_seen[e];
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].id != e || out_seen[e] != 1 || in_seen[e] != 1 || label_seen[e] != 1) {
      return false;
    }
  }
  return std::is_sorted(labels_.begin(), labels_.end()) &&
         std::adjacent_find(labels_.begin(), labels_.end()) == labels_.end();
}

VertexId PropertyGraph::Builder::add_vertex(Label type, PropertyMap properties,
                                            std::optional<std::uint64_t> external_id) {
  const auto id = static_cast<VertexId>(vertices_.size());
  const std::uint64_t ext = external_id.value_or(id);
  if (!by_external_.emplace(ext, id).second) {
    throw InputError("duplicate vertex id " + std::to_string(ext));
  }
  vertices_.push_back(Vertex{id, std::move(type), std::move(properties)});
  external_ids_.push_back(ext);
  return id;
}

EdgeId PropertyGraph::Builder::add_edge(VertexId src, Label label, VertexId dst,
                                        PropertyMap properties) {
  if (src >= vertices_.size() || dst >= vertices_.size()) {
    throw InputError("edge endpoint references an unknown vertex");
  }
  edges_.push_back(PendingEdge{src, std::move(label), dst, std::move(properties)});
  return static_cast<EdgeId>(edges_.size() - 1);
}

std::optional<VertexId> PropertyGraph::Builder::find_external(std::uint64_t external_id) const {
  auto it = by_external_.find(external_id);
  if (it == by_external_.end()) return std::nullopt;
  return it->second;
}

PropertyGraph PropertyGraph::Builder::build() && {
  PropertyGraph g;
  for (const auto& e : edges_) g.labels_.push_back(e.label);
  std::sort(g.labels_.begin(), g.labels_.end());
  g.labels_.erase(std::unique(g.labels_.begin(), g.labels_.end()), g.labels_.end());

  g.edges_.reserve(edges_.size());
  for (auto& pending : edges_) {
    const auto l = static_cast<LabelId>(
        std::lower_bound(g.labels_.begin(), g.labels_.end(), pending.label) - g.labels_.begin());
    g.edges_.push_back(Edge{static_cast<EdgeId>(g.edges_.size()), pending.src, l, pending.dst,
                            std::move(pending.properties)});
  }
  g.vertices_ = std::move(vertices_);
  g.external_ids_ = std::move(external_ids_);
  g.by_external_ = std::move(by_external_);
  g.build_indexes();
  return g;
}

FrequencyList label_frequencies(const PropertyGraph& g) {
  FrequencyList list;
  list.reserve(g.labels().size());
  for (LabelId l = 0; l < g.labels().size(); ++l) {
    list.push_back({g.label(l), g.edges_with_label(l).size()});
  }
  // labels() is already ascending, so a stable sort keeps the lexicographic tie order.
  std::stable_sort(list.begin(), list.end(),
                   [](const LabelCount& a, const LabelCount& b) { return a.count > b.count; });
  return list;
}

}  // namespace grasp
