#include "fixtures.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

#include "grasp/graph_io.hpp"

namespace grasp::testing {

std::string source_path(const std::string& relative) {
  return std::string(GRASP_SOURCE_DIR) + "/" + relative;
}

PropertyGraph running_example() { return load_graph_path(source_path("data/gsn")); }

VertexId vertex_named(const PropertyGraph& g, const std::string& name) {
  for (const auto& v : g.vertices()) {
    const auto it = v.properties.find("name");
    if (it != v.properties.end() && std::get_if<std::string>(&it->second) &&
        std::get<std::string>(it->second) == name) {
      return v.id;
    }
  }
  throw std::out_of_range("no vertex named " + name);
}

PropertyGraph random_graph(std::uint64_t seed, std::size_t max_vertices, std::size_t max_labels) {
  std::mt19937_64 rng(seed);
  const auto n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const auto labels = std::uniform_int_distribution<std::size_t>(1, max_labels)(rng);
  // Sparse to dense-ish, so both many small and few large components show up.
  const double density = std::uniform_real_distribution<double>(0.2, 2.5)(rng);
  const auto m = static_cast<std::size_t>(density * static_cast<double>(n));

  PropertyGraph::Builder b;
  std::bernoulli_distribution has_age(0.5);
  std::uniform_int_distribution<std::int64_t> age(10, 60);
  for (std::size_t i = 0; i < n; ++i) {
    PropertyMap props;
    if (has_age(rng)) props["age"] = age(rng);
    b.add_vertex(Label("T" + std::to_string(i % 3)), std::move(props));
  }
  std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
  // Skewed labels so frequency order matters.
  std::vector<double> weights;
  for (std::size_t l = 0; l < labels; ++l) weights.push_back(1.0 / static_cast<double>(l + 1));
  std::discrete_distribution<std::size_t> label(weights.begin(), weights.end());
  for (std::size_t i = 0; i < m; ++i) {
    b.add_edge(vertex(rng), Label("l" + std::to_string(label(rng))), vertex(rng));
  }
  return std::move(b).build();
}

std::int64_t brute_label_count(const PropertyGraph& g, const std::string& label) {
  std::int64_t n = 0;
  for (const auto& e : g.edges()) n += g.label(e.label).str() == label ? 1 : 0;
  return n;
}

std::int64_t brute_plus_pairs(const PropertyGraph& g, const std::string& label) {
  const auto n = g.vertex_count();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) {
    if (g.label(e.label).str() == label) r[e.src][e.dst] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  std::int64_t pairs = 0;
  for (const auto& row : r)
    for (char c : row) pairs += c;
  return pairs;
}

std::int64_t brute_edge_pairs(const PropertyGraph& g, const std::string& l1, bool end1_is_source,
                              const std::string& l2, bool end2_is_source) {
  std::int64_t n = 0;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (g.label(edges[i].label).str() != l1) continue;
    const auto a = end1_is_source ? edges[i].src : edges[i].dst;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i == j || g.label(edges[j].label).str() != l2) continue;
      const auto b = end2_is_source ? edges[j].src : edges[j].dst;
      n += a == b ? 1 : 0;
    }
  }
  return n;
}

}  // namespace grasp::testing
