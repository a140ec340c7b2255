#include "grasp/generator.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "grasp/errors.hpp"
#include "grasp/graph_io.hpp"

namespace grasp {
namespace {

std::string serialize(const PropertyGraph& g) {
  std::ostringstream out;
  write_nodes(g, out);
  write_edges(g, out);
  return out.str();
}

TEST(Generator, BibShape) {
  const auto schema = bib_schema();
  EXPECT_EQ(schema.vertex_types.size(), 5u);
  EXPECT_EQ(schema.edge_label_count(), 4u);
  const auto g = generate_synthetic(schema, 1000, 7);
  EXPECT_NEAR(static_cast<double>(g.vertex_count()), 1000.0, 100.0);
  EXPECT_EQ(g.labels().size(), 4u);
  std::set<Label> types;
  for (const auto& v : g.vertices()) types.insert(v.type);
  EXPECT_EQ(types.size(), 5u);
  EXPECT_TRUE(g.audit());
}

TEST(Generator, ShopShape) {
  const auto schema = shop_schema();
  EXPECT_EQ(schema.vertex_types.size(), 24u);
  EXPECT_EQ(schema.edge_label_count(), 82u);
  const auto g = generate_synthetic(schema, 5000, 3);
  EXPECT_NEAR(static_cast<double>(g.vertex_count()), 5000.0, 500.0);
  EXPECT_EQ(g.labels().size(), 82u);
}

TEST(Generator, ZeroTargetGivesEmptyGraph) {
  const auto g = generate_synthetic(bib_schema(), 0, 1);
  EXPECT_EQ(g.vertex_count(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Generator, DeterministicPerSeed) {
  EXPECT_EQ(serialize(generate_synthetic(bib_schema(), 800, 11)),
            serialize(generate_synthetic(bib_schema(), 800, 11)));
  EXPECT_NE(serialize(generate_synthetic(bib_schema(), 800, 11)),
            serialize(generate_synthetic(bib_schema(), 800, 12)));
}

TEST(Generator, PropertiesStayInRange) {
  const auto g = generate_synthetic(bib_schema(), 500, 5);
  for (const auto& v : g.vertices()) {
    if (v.type.str() != "researcher") continue;
    const auto age = std::get<std::int64_t>(v.properties.at("age"));
    EXPECT_GE(age, 22);
    EXPECT_LE(age, 80);
  }
}

TEST(Generator, EdgesRespectPredicateTypes) {
  const auto schema = bib_schema();
  const auto g = generate_synthetic(schema, 600, 9);
  for (const auto& e : g.edges()) {
    bool ok = false;
    for (const auto& p : schema.predicates) {
      ok = ok || (p.label == g.label(e.label) && p.source == g.vertex(e.src).type &&
                  p.target == g.vertex(e.dst).type);
    }
    EXPECT_TRUE(ok);
  }
}

TEST(Schema, ParseAndValidate) {
  const auto s = parse_schema(nlohmann::json::parse(R"({
    "name": "tiny",
    "vertex_types": [{"label": "A", "proportion": 1, "properties": [{"name": "w", "min": 1, "max": 2}]},
                     {"label": "B", "proportion": 3}],
    "predicates": [{"source": "A", "label": "r", "target": "B",
                    "out_degree": {"distribution": "zipfian", "min": 0, "max": 4, "alpha": 2}}]
  })"));
  EXPECT_EQ(s.name, "tiny");
  ASSERT_EQ(s.predicates.size(), 1u);
  EXPECT_EQ(s.predicates[0].out_degree.kind, DegreeDistribution::Kind::zipfian);
  const auto g = generate_synthetic(s, 40, 1);
  EXPECT_EQ(g.vertex_count(), 40u);
  EXPECT_EQ(g.labels().size(), 1u);
}

TEST(Schema, RejectsInfeasible) {
  const char* bad[] = {
      R"({"vertex_types": [], "predicates": []})",
      R"({"vertex_types": [{"label": "A", "proportion": 0}], "predicates": []})",
      R"({"vertex_types": [{"label": "A", "proportion": 1}, {"label": "A", "proportion": 1}], "predicates": []})",
      R"({"vertex_types": [{"label": "A", "proportion": 1}], "predicates": [{"source": "A", "label": "r", "target": "C"}]})",
      R"({"vertex_types": [{"label": "A", "proportion": 1}], "predicates": [{"source": "A", "label": "r", "target": "A", "out_degree": {"distribution": "poisson"}}]})",
      R"({"vertex_types": [{"label": "A", "proportion": -1}, {"label": "B", "proportion": 2}], "predicates": []})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(parse_schema(nlohmann::json::parse(text)), InputError) << text;
  }
}

}  // namespace
}  // namespace grasp
