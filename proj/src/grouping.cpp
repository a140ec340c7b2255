#include "grasp/grouping.hpp"

#include <algorithm>
#include <numeric>

namespace grasp {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;  // smallest id stays the root
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<Subgrouping> max_weak_label_components(const PropertyGraph& g, const Label& l,
                                                   const std::vector<bool>& available) {
  std::vector<Subgrouping> out;
  const auto label = g.find_label(l);
  if (!label) return out;

  DisjointSets sets(g.vertex_count());
  std::vector<bool> touched(g.vertex_count(), false);
  for (EdgeId e : g.edges_with_label(*label)) {
    const auto& edge = g.edge(e);
    if (!available[edge.src] || !available[edge.dst]) continue;
    sets.unite(edge.src, edge.dst);
    touched[edge.src] = touched[edge.dst] = true;
  }

  // Roots are the smallest member, so scanning vertices in order yields
  // components ordered by smallest id.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> component_of(g.vertex_count(), none);
  std::vector<std::size_t> slot_of_root(g.vertex_count(), none);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) continue;
    const auto root = sets.find(v);
    if (slot_of_root[root] == none) {
      slot_of_root[root] = out.size();
      out.push_back(Subgrouping{{}, {}, l});
    }
    component_of[v] = slot_of_root[root];
    out[component_of[v]].vertices.push_back(v);
  }
  for (auto& sub : out) {
    for (VertexId v : sub.vertices) {
      for (EdgeId e : g.out_edges(v)) {
        if (component_of[g.edge(e).dst] == component_of[v]) sub.inner_edges.push_back(e);
      }
    }
    std::sort(sub.inner_edges.begin(), sub.inner_edges.end());
  }
  return out;
}

Partitioning grouping(const PropertyGraph& g) {
  Partitioning p;
  std::vector<bool> available(g.vertex_count(), true);
  for (const auto& [label, count] : label_frequencies(g)) {
    auto components = max_weak_label_components(g, label, available);
    if (components.empty()) continue;
    for (const auto& c : components) {
      for (VertexId v : c.vertices) available[v] = false;
    }
    p.groupings.push_back(Grouping{label, std::move(components)});
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (available[v]) p.residual.push_back(v);
  }
  return p;
}

}  // namespace grasp
