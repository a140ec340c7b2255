#include "grasp/summary.hpp"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "grasp/errors.hpp"
#include "grasp/summary_io.hpp"

namespace grasp {
namespace {

const Label l0("l0"), l2("l2"), l3("l3"), l4("l4"), l5("l5"), l6("l6");

const Hyperedge* find_edge(const Summary& s, std::uint32_t src, const Label& l, std::uint32_t dst) {
  for (const auto& he : s.hyperedges)
    if (he.src == src && he.label == l && he.dst == dst) return &he;
  return nullptr;
}

TEST(ParseMode, Spellings) {
  EXPECT_EQ(parse_mode("target"), HeuristicMode::target);
  EXPECT_EQ(parse_mode("source-merge"), HeuristicMode::source);
  EXPECT_THROW(parse_mode("both"), InputError);
}

TEST(MergeProperties, WeightedLabelPercent) {
  AqpProperties a, b;
  a.eweight = 4;
  a.lpercent[l0] = 1.0;
  b.eweight = 6;
  b.lpercent[l2] = 1.0;
  const AqpProperties* parts[] = {&a, &b};
  const auto m = merge_hn_properties(parts);
  EXPECT_DOUBLE_EQ(m.lpercent_of(l0), 0.4);
  EXPECT_DOUBLE_EQ(m.lpercent_of(l2), 0.6);
  EXPECT_EQ(m.eweight, 10);
}

TEST(MergeProperties, SingletonIsIdentity) {
  const auto g = testing::running_example();
  const auto sg = evaluate_phase(grouping(g), g, all_labels(g));
  for (const auto& sn : sg.supernodes) {
    const AqpProperties* parts[] = {&sn.props};
    EXPECT_EQ(merge_hn_properties(parts), sn.props);
  }
}

TEST(MergeProperties, RatioOfSums) {
  const TraversalKey k{l4, l5, Incidence::outgoing, Incidence::outgoing};
  const FrontierKey f{l4, Incidence::outgoing};
  AqpProperties a, b;
  a.vweight = 2;
  a.traversal[k] = 3;
  a.frontier[f] = 1;
  b.vweight = 4;
  b.traversal[k] = 1;
  b.frontier[f] = 3;
  const AqpProperties* parts[] = {&a, &b};
  const auto m = merge_hn_properties(parts);
  EXPECT_DOUBLE_EQ(m.rlpart_of(k), 1.0);
  EXPECT_DOUBLE_EQ(m.avg_sn_vweight, 3.0);
}

TEST(Grasp, TargetMergeRunningExample) {
  const auto s = grasp(testing::running_example(), {}, HeuristicMode::target);
  ASSERT_EQ(s.hypernodes.size(), 4u);
  EXPECT_EQ(s.hypernodes[0].props.vweight, 10);
  EXPECT_EQ(s.hypernodes[1].members, (std::vector<std::uint32_t>{1, 2, 3, 5, 6}));
  EXPECT_EQ(s.hypernodes[1].props.vweight, 11);
  EXPECT_EQ(s.hypernodes[1].props.eweight, 6);
  EXPECT_DOUBLE_EQ(s.hypernodes[1].props.lpercent_of(l5), 1.0);
  EXPECT_DOUBLE_EQ(s.hypernodes[1].props.avg_sn_vweight, 11.0 / 5.0);
  EXPECT_EQ(s.hypernodes[2].members, (std::vector<std::uint32_t>{4}));
  EXPECT_EQ(s.hypernodes[3].members, (std::vector<std::uint32_t>{7, 8}));
  EXPECT_FALSE(s.hypernodes[3].dominant_label);

  const auto* he = find_edge(s, 1, l4, 0);
  ASSERT_NE(he, nullptr);
  EXPECT_EQ(he->weight, 6);
  EXPECT_EQ(he->superedge_count, 5);
  ASSERT_NE(find_edge(s, 2, l4, 0), nullptr);
  EXPECT_EQ(find_edge(s, 2, l4, 0)->weight, 1);
  EXPECT_EQ(find_edge(s, 3, l3, 1)->weight, 5);
  EXPECT_EQ(find_edge(s, 3, l2, 0)->weight, 2);
  EXPECT_EQ(find_edge(s, 0, l6, 2)->weight, 1);
  EXPECT_EQ(s.hyperedges.size(), 6u);
}

TEST(Grasp, SourceMergeRunningExample) {
  const auto s = grasp(testing::running_example(), {}, HeuristicMode::source);
  ASSERT_EQ(s.hypernodes.size(), 3u);
  EXPECT_EQ(s.hypernodes[1].supernode_count, 6);
  EXPECT_EQ(s.hypernodes[1].props.eweight, 7);
  EXPECT_DOUBLE_EQ(s.hypernodes[1].props.lpercent_of(l5), 1.0);
  const auto* he = find_edge(s, 1, l4, 0);
  ASSERT_NE(he, nullptr);
  EXPECT_EQ(he->weight, 7);
  EXPECT_EQ(he->superedge_count, 6);
}

TEST(Grasp, EmptyGraph) {
  const auto s = grasp(PropertyGraph::Builder{}.build(), {}, HeuristicMode::target);
  EXPECT_TRUE(s.hypernodes.empty());
  EXPECT_TRUE(s.hyperedges.empty());
}

TEST(Grasp, SingleSupernodeGivesSingleHypernode) {
  PropertyGraph::Builder b;
  const auto a = b.add_vertex(Label("T"));
  const auto c = b.add_vertex(Label("T"));
  b.add_edge(a, Label("x"), c);
  const auto g = std::move(b).build();
  for (auto mode : {HeuristicMode::target, HeuristicMode::source}) {
    const auto s = grasp(g, {}, mode);
    EXPECT_EQ(s.hypernodes.size(), 1u);
    EXPECT_TRUE(s.hyperedges.empty());
  }
}

TEST(Grasp, UnknownQueryLabelsAreWarned) {
  std::vector<std::string> warnings;
  const auto s = grasp(testing::running_example(), {l4, Label("zz")}, HeuristicMode::target,
                       &warnings);
  EXPECT_EQ(s.query_labels, LabelSet{l4});
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("zz"), std::string::npos);
}

TEST(Grasp, QueryLabelsRestrictMergeKeys) {
  // With only l4 tracked, every reply supernode has the same (empty) in-key.
  const auto s = grasp(testing::running_example(), {l4}, HeuristicMode::target);
  EXPECT_EQ(s.hypernodes.size(), 3u);
  EXPECT_EQ(s.total_vweight(), 25);
  EXPECT_EQ(s.total_eweight() + s.total_hyperedge_weight(), 37);
}

TEST(Emerge, FoldsInternalSuperedges) {
  const std::vector<Superedge> ses{{0, l0, 1, 2}, {1, l0, 0, 1}, {0, l2, 2, 3}, {1, l2, 2, 4}};
  const std::vector<std::uint32_t> hn{0, 0, 1};
  const auto m = emerge(ses, hn, 2);
  EXPECT_EQ(m.folded, (std::vector<std::int64_t>{2, 0}));
  ASSERT_EQ(m.hyperedges.size(), 1u);
  EXPECT_EQ(m.hyperedges[0].weight, 7);
  EXPECT_EQ(m.hyperedges[0].superedge_count, 2);
}

TEST(Emerge, IdentityWhenNothingShared) {
  const std::vector<Superedge> ses{{0, l0, 1, 2}, {1, l2, 0, 1}};
  const std::vector<std::uint32_t> hn{0, 1};
  const auto m = emerge(ses, hn, 2);
  ASSERT_EQ(m.hyperedges.size(), 2u);
  EXPECT_EQ(m.hyperedges[0].weight, 2);
  EXPECT_EQ(m.hyperedges[1].weight, 1);
}

class SummaryProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SummaryProperties, ConservationAndClasses) {
  const auto g = testing::random_graph(GetParam());
  const auto sg = evaluate_phase(grouping(g), g, all_labels(g));
  for (auto mode : {HeuristicMode::target, HeuristicMode::source}) {
    const auto s = grasp(g, {}, mode);
    EXPECT_EQ(s.total_vweight(), static_cast<std::int64_t>(g.vertex_count()));
    EXPECT_EQ(s.total_eweight() + s.total_hyperedge_weight(),
              static_cast<std::int64_t>(g.edge_count()));

    // Per-label bookkeeping.
    for (const auto& l : g.labels()) {
      std::int64_t n = 0;
      for (const auto& hn : s.hypernodes) n += hn.props.label_edges_of(l);
      for (const auto& he : s.hyperedges) n += he.label == l ? he.weight : 0;
      EXPECT_EQ(n, testing::brute_label_count(g, l.str())) << l;
      double mass = 0;
      for (const auto& hn : s.hypernodes)
        mass += hn.props.lpercent_of(l) * static_cast<double>(hn.props.eweight);
      for (const auto& he : s.hyperedges) mass += he.label == l ? he.weight : 0;
      EXPECT_NEAR(mass, static_cast<double>(n), 1e-9);
    }

    // Members of a hypernode share dominant label and the merge-side label set.
    std::vector<LabelSet> in_labels(sg.supernodes.size()), out_labels(sg.supernodes.size());
    for (const auto& se : sg.superedges) {
      in_labels[se.dst].insert(se.label);
      out_labels[se.src].insert(se.label);
    }
    const auto& key = mode == HeuristicMode::target ? in_labels : out_labels;
    std::set<std::pair<std::optional<Label>, LabelSet>> seen;
    for (const auto& hn : s.hypernodes) {
      for (auto m : hn.members) {
        EXPECT_EQ(sg.supernodes[m].dominant_label, hn.dominant_label);
        EXPECT_EQ(key[m], key[hn.members.front()]);
      }
      EXPECT_TRUE(seen.insert({hn.dominant_label, key[hn.members.front()]}).second);
    }

    std::set<std::tuple<std::uint32_t, Label, std::uint32_t>> distinct;
    for (const auto& he : s.hyperedges) {
      EXPECT_TRUE(distinct.insert({he.src, he.label, he.dst}).second);
      EXPECT_GE(he.weight, 1);
    }
  }
}

TEST_P(SummaryProperties, DeterministicSerialization) {
  const auto g = testing::random_graph(GetParam());
  const auto a = dump_canonical(summary_to_json(grasp(g, {}, HeuristicMode::source)));
  const auto b = dump_canonical(summary_to_json(grasp(g, {}, HeuristicMode::source)));
  EXPECT_EQ(a, b);
  const auto back = summary_from_json(nlohmann::json::parse(a));
  EXPECT_EQ(dump_canonical(summary_to_json(back)), a);
}

INSTANTIATE_TEST_SUITE_P(RandomGraphs, SummaryProperties, ::testing::Range<std::uint64_t>(1, 41));

TEST(SummaryJson, Layout) {
  const auto s = grasp(testing::running_example(), {}, HeuristicMode::target);
  const auto j = summary_to_json(s);
  EXPECT_EQ(j.at("mode"), "target");
  EXPECT_EQ(j.at("source_graph_digest").get<std::string>().size(), 16u);
  const auto& hn = j.at("hypernodes").at(0);
  for (const char* key : {"id", "members", "dominant_label", "vweight", "eweight", "lpercent",
                          "lreach", "ereach", "rlpart", "avg_sn_vweight", "supernode_count"}) {
    EXPECT_TRUE(hn.contains(key)) << key;
  }
  EXPECT_EQ(hn.at("lreach").at("l0"), 15);
  EXPECT_TRUE(j.at("hypernodes").at(3).at("dominant_label").is_null());
  EXPECT_DOUBLE_EQ(hn.at("lpercent").at("l0").get<double>(), round_significant(11.0 / 14.0));
  EXPECT_TRUE(looks_like_summary(j));
}

TEST(SummaryJson, RejectsMalformed) {
  EXPECT_THROW(summary_from_json(nlohmann::json::object()), InputError);
  auto j = summary_to_json(grasp(testing::running_example(), {}, HeuristicMode::target));
  j["hyperedges"][0]["dst"] = 99;
  EXPECT_THROW(summary_from_json(j), InputError);
}

}  // namespace
}  // namespace grasp
