#include "grasp/graph_io.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "grasp/errors.hpp"

namespace grasp {
namespace {

PropertyGraph parse(const std::string& nodes, const std::string& edges) {
  std::istringstream n(nodes), e(edges);
  return load_graph(n, e);
}

std::size_t error_line(const std::string& nodes, const std::string& edges) {
  try {
    parse(nodes, edges);
  } catch (const InputError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error";
  return 0;
}

TEST(LoadGraph, EmptySources) {
  const auto g = parse("", "");
  EXPECT_EQ(g.vertex_count(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(LoadGraph, SparseIdsAreRemapped) {
  const auto g = parse("# comment\n100,A\n\n7,B,age=3;score=1.5;name=\"x, y\";note=hello\n",
                       "7,knows,100\n");
  ASSERT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.external_id(0), 100u);
  EXPECT_EQ(g.external_id(1), 7u);
  EXPECT_EQ(g.find_vertex(7), VertexId{1});
  const auto& props = g.vertex(1).properties;
  EXPECT_EQ(std::get<std::int64_t>(props.at("age")), 3);
  EXPECT_DOUBLE_EQ(std::get<double>(props.at("score")), 1.5);
  EXPECT_EQ(std::get<std::string>(props.at("name")), "x, y");
  EXPECT_EQ(std::get<std::string>(props.at("note")), "hello");
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge(0).src, VertexId{1});
  EXPECT_EQ(g.edge(0).dst, VertexId{0});
}

TEST(LoadGraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("1,A\n2,A\n", "1,x,2\n1,x,3\n"), 2u);
  EXPECT_EQ(error_line("1,A\n# c\n1,B\n", ""), 3u);
  EXPECT_EQ(error_line("1,A\nzz,A\n", ""), 2u);
  EXPECT_EQ(error_line("1,A\n", "1,bad label,1\n"), 1u);
  EXPECT_EQ(error_line("1\n", ""), 1u);
}

TEST(LoadGraph, DanglingEndpointMessage) {
  try {
    parse("1,A\n", "1,x,9\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("dangling"), std::string::npos);
  }
}

TEST(PropertyValues, Parsing) {
  EXPECT_TRUE(std::holds_alternative<Undefined>(parse_property_value("")));
  EXPECT_TRUE(std::holds_alternative<Undefined>(parse_property_value("null")));
  EXPECT_EQ(std::get<std::int64_t>(parse_property_value("-12")), -12);
  EXPECT_DOUBLE_EQ(std::get<double>(parse_property_value("2.25")), 2.25);
  EXPECT_EQ(std::get<std::string>(parse_property_value("\"12\"")), "12");
  EXPECT_EQ(std::get<std::string>(parse_property_value("abc")), "abc");
}

TEST(PropertyValues, FormatParseRoundTrip) {
  for (const PropertyValue& v :
       {PropertyValue{Undefined{}}, PropertyValue{std::int64_t{-5}}, PropertyValue{3.0},
        PropertyValue{0.1}, PropertyValue{std::string("a;b=\"c\"")}, PropertyValue{std::string("7")}}) {
    EXPECT_EQ(parse_property_value(format_property_value(v)), v);
  }
}

TEST(LoadGraph, TextRoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto g = testing::random_graph(seed);
    std::ostringstream n, e;
    write_nodes(g, n);
    write_edges(g, e);
    EXPECT_EQ(parse(n.str(), e.str()), g) << "seed " << seed;
  }
}

TEST(LoadGraph, JsonMirrorMatchesText) {
  const auto g = testing::running_example();
  const auto j = graph_to_json(g);
  EXPECT_EQ(load_graph_json(j), g);
  EXPECT_EQ(graph_digest(load_graph_json(j)), graph_digest(g));
}

TEST(LoadGraph, JsonErrors) {
  EXPECT_THROW(load_graph_json(nlohmann::json::array()), InputError);
  EXPECT_THROW(load_graph_json(nlohmann::json{{"nodes", {{{"id", 1}}}}}), InputError);
  EXPECT_THROW(load_graph_json(nlohmann::json{
                   {"nodes", {{{"id", 1}, {"type_label", "A"}}}},
                   {"edges", {{{"src_id", 1}, {"label", "x"}, {"dst_id", 2}}}}}),
               InputError);
}

TEST(LoadGraph, Deterministic) {
  EXPECT_EQ(graph_digest(testing::running_example()), graph_digest(testing::running_example()));
}

}  // namespace
}  // namespace grasp
