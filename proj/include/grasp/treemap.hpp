#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grasp/summary.hpp"

namespace grasp {

struct LpercentEntry {
  Label label;
  double percent = 0;
};

struct TreemapCell {
  std::uint32_t id = 0;
  std::int64_t area = 0;  // vweight
  std::optional<Label> color_key;
  std::int64_t eweight = 0;
  std::int64_t supernode_count = 0;
  std::vector<LpercentEntry> top_lpercent;  // at most 3, largest first
};

struct TreemapLink {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  Label label;
  std::int64_t thickness = 0;  // hyperedge weight
};

struct LegendEntry {
  Label label;
  std::string color;
  std::int64_t total_weight = 0;
};

struct TreemapPayload {
  std::vector<TreemapCell> cells;
  std::vector<TreemapLink> links;
  std::vector<LegendEntry> legend;  // labels on links, ascending
};

/// Categorical palette; colors cycle by label position in the legend.
const std::vector<std::string>& treemap_palette();

TreemapPayload build_treemap(const Summary& s);
nlohmann::json treemap_to_json(const TreemapPayload& p);

}  // namespace grasp
