#include "grasp/treemap.hpp"

#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "grasp/summary_io.hpp"

namespace grasp {
namespace {

void expect_conserves(const PropertyGraph& g, const Summary& s, const TreemapPayload& p) {
  std::int64_t area = 0, thickness = 0, legend_total = 0;
  std::set<std::uint32_t> cells;
  for (const auto& c : p.cells) {
    area += c.area;
    cells.insert(c.id);
    EXPECT_LE(c.top_lpercent.size(), 3u);
    for (std::size_t i = 1; i < c.top_lpercent.size(); ++i)
      EXPECT_GE(c.top_lpercent[i - 1].percent, c.top_lpercent[i].percent);
  }
  for (const auto& l : p.links) {
    thickness += l.thickness;
    EXPECT_TRUE(cells.count(l.src));
    EXPECT_TRUE(cells.count(l.dst));
  }
  for (const auto& e : p.legend) legend_total += e.total_weight;
  EXPECT_EQ(area, static_cast<std::int64_t>(g.vertex_count()));
  EXPECT_EQ(thickness, s.total_hyperedge_weight());
  EXPECT_EQ(legend_total, thickness);
}

TEST(Treemap, RunningExampleTargetMerge) {
  const auto g = testing::running_example();
  const auto s = grasp(g, {}, HeuristicMode::target);
  const auto p = build_treemap(s);
  ASSERT_EQ(p.cells.size(), 4u);
  EXPECT_EQ(p.links.size(), 6u);
  expect_conserves(g, s, p);

  // Cell 0 holds the ten persons. The merged replies and messages outweigh it.
  EXPECT_EQ(p.cells[0].area, 10);
  EXPECT_EQ(p.cells[0].color_key, Label("l0"));
  const auto largest = std::max_element(p.cells.begin(), p.cells.end(),
                                        [](const auto& a, const auto& b) { return a.area < b.area; });
  EXPECT_EQ(largest->id, 1u);
  EXPECT_EQ(largest->area, 11);

  std::set<Label> on_links;
  for (const auto& l : p.links) on_links.insert(l.label);
  std::set<Label> in_legend;
  for (const auto& e : p.legend) in_legend.insert(e.label);
  EXPECT_EQ(on_links, in_legend);
}

TEST(Treemap, LegendColorsFollowLabelOrder) {
  const auto g = testing::running_example();
  const auto p = build_treemap(grasp(g, {}, HeuristicMode::source));
  const auto& palette = treemap_palette();
  for (std::size_t i = 0; i < p.legend.size(); ++i) {
    EXPECT_EQ(p.legend[i].color, palette[i % palette.size()]);
    if (i > 0) EXPECT_LT(p.legend[i - 1].label, p.legend[i].label);
  }
}

TEST(Treemap, ConservationOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = testing::random_graph(seed);
    for (auto mode : {HeuristicMode::target, HeuristicMode::source}) {
      const auto s = grasp(g, {}, mode);
      expect_conserves(g, s, build_treemap(s));
    }
  }
}

TEST(Treemap, EmptySummary) {
  const auto p = build_treemap(Summary{});
  EXPECT_TRUE(p.cells.empty());
  EXPECT_TRUE(p.links.empty());
  EXPECT_TRUE(p.legend.empty());
  const auto j = treemap_to_json(p);
  EXPECT_TRUE(j["cells"].is_array() && j["cells"].empty());
}

TEST(Treemap, JsonIsDeterministic) {
  const auto g = testing::random_graph(3);
  const auto s = grasp(g, {}, HeuristicMode::target);
  EXPECT_EQ(dump_canonical(treemap_to_json(build_treemap(s))),
            dump_canonical(treemap_to_json(build_treemap(s))));
}

}  // namespace
}  // namespace grasp
