#include "grasp/treemap.hpp"

#include <algorithm>
#include <map>

#include "grasp/summary_io.hpp"

namespace grasp {

const std::vector<std::string>& treemap_palette() {
  static const std::vector<std::string> palette = {
      "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
      "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
  return palette;
}

TreemapPayload build_treemap(const Summary& s) {
  TreemapPayload p;
  for (const auto& hn : s.hypernodes) {
    TreemapCell c;
    c.id = hn.id;
    c.area = hn.props.vweight;
    c.color_key = hn.dominant_label;
    c.eweight = hn.props.eweight;
    c.supernode_count = hn.supernode_count;
    for (const auto& [l, pct] : hn.props.lpercent)
      if (pct > 0) c.top_lpercent.push_back({l, pct});
    std::stable_sort(c.top_lpercent.begin(), c.top_lpercent.end(),
                     [](const auto& a, const auto& b) { return a.percent > b.percent; });
    if (c.top_lpercent.size() > 3) c.top_lpercent.resize(3);
    p.cells.push_back(std::move(c));
  }

  std::map<Label, std::int64_t> totals;
  for (const auto& he : s.hyperedges) {
    p.links.push_back({he.src, he.dst, he.label, he.weight});
    totals[he.label] += he.weight;
  }
  const auto& palette = treemap_palette();
  std::size_t i = 0;
  for (const auto& [l, w] : totals) p.legend.push_back({l, palette[i++ % palette.size()], w});
  return p;
}

nlohmann::json treemap_to_json(const TreemapPayload& p) {
  using nlohmann::json;
  json j;
  j["cells"] = json::array();
  for (const auto& c : p.cells) {
    json top = json::array();
    for (const auto& e : c.top_lpercent)
      top.push_back({{"label", e.label.str()}, {"percent", round_significant(e.percent)}});
    j["cells"].push_back({{"id", c.id},
                          {"area", c.area},
                          {"color_key", c.color_key ? json(c.color_key->str()) : json(nullptr)},
                          {"eweight", c.eweight},
                          {"supernode_count", c.supernode_count},
                          {"top_lpercent", std::move(top)}});
  }
  j["links"] = json::array();
  for (const auto& l : p.links)
    j["links"].push_back(
        {{"src", l.src}, {"dst", l.dst}, {"label", l.label.str()}, {"thickness", l.thickness}});
  j["legend"] = json::array();
  for (const auto& e : p.legend)
    j["legend"].push_back(
        {{"label", e.label.str()}, {"color", e.color}, {"total_weight", e.total_weight}});
  return j;
}

}  // namespace grasp
