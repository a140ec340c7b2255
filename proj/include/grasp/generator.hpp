#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "grasp/property_graph.hpp"

namespace grasp {

/// Degree distribution of a predicate. `uniform` draws from [min, max];
/// `zipfian` draws k in [min, max] with weight (k + 1 - min)^-alpha.
struct DegreeDistribution {
  enum class Kind { uniform, zipfian };
  Kind kind = Kind::uniform;
  std::uint32_t min = 1;
  std::uint32_t max = 1;
  double alpha = 1.0;
};

struct NumericPropertySpec {
  std::string name;
  std::int64_t min = 0;
  std::int64_t max = 0;
};

struct VertexTypeSpec {
  Label label;
  double proportion = 0;
  std::vector<NumericPropertySpec> properties;
};

struct PredicateSpec {
  Label source;
  Label label;
  Label target;
  DegreeDistribution out_degree;
  /// Popularity skew over targets; 0 picks targets uniformly.
  double target_skew = 0;
};

struct GraphSchema {
  std::string name;
  std::vector<VertexTypeSpec> vertex_types;
  std::vector<PredicateSpec> predicates;

  std::size_t edge_label_count() const;
};

/// Throws InputError when the schema is malformed or infeasible.
GraphSchema parse_schema(const nlohmann::json& doc);
GraphSchema load_schema(std::istream& in);
nlohmann::json schema_to_json(const GraphSchema& schema);
void validate_schema(const GraphSchema& schema);

/// Seeded generator: type counts follow the proportions (largest remainder, so
/// |V| equals target_size), each source draws an out-degree and distinct
/// targets. Every predicate yields at least one edge when both of its types
/// are populated. Same inputs give the same graph.
PropertyGraph generate_synthetic(const GraphSchema& schema, std::size_t target_size,
                                 std::uint64_t seed);

/// Built-in schemas shaped after common benchmark datasets.
GraphSchema bib_schema();
GraphSchema shop_schema();

}  // namespace grasp
