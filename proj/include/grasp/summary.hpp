#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grasp/supergraph.hpp"

namespace grasp {

/// target: supernodes merge on (dominant label, incoming superedge labels).
/// source: on (dominant label, outgoing superedge labels).
enum class HeuristicMode { target, source };

/// Accepts `target`, `source`, `target-merge` and `source-merge`.
HeuristicMode parse_mode(std::string_view text);
std::string to_string(HeuristicMode mode);

struct Hypernode {
  std::uint32_t id = 0;
  std::vector<std::uint32_t> members;  // supernode ids, ascending
  std::optional<Label> dominant_label;
  AqpProperties props;
  std::int64_t supernode_count = 0;

  friend bool operator==(const Hypernode&, const Hypernode&) = default;
};

struct Hyperedge {
  std::uint32_t src = 0;
  Label label;
  std::uint32_t dst = 0;
  std::int64_t weight = 0;           // original cross-edges
  std::int64_t superedge_count = 0;  // fused superedges

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

struct Summary {
  std::vector<Hypernode> hypernodes;
  std::vector<Hyperedge> hyperedges;  // sorted by (src, label, dst)
  HeuristicMode mode = HeuristicMode::target;
  LabelSet query_labels;
  std::string source_graph_digest;

  std::int64_t total_vweight() const;
  std::int64_t total_eweight() const;
  std::int64_t total_hyperedge_weight() const;

  friend bool operator==(const Summary&, const Summary&) = default;
};

/// Hypernodes as classes of supernodes with equal merge key, ordered by their
/// smallest supernode. Only labels in `labels` enter the key. `hypernode_of`
/// receives the class of every supernode. Properties are left empty.
std::vector<Hypernode> vmerge(const Supergraph& sg, const LabelSet& labels, HeuristicMode mode,
                              std::vector<std::uint32_t>& hypernode_of);

/// Additive fields are summed; lpercent is the eweight-weighted average and
/// rlpart is recomputed as summed traversal over summed frontier.
AqpProperties merge_hn_properties(std::span<const AqpProperties* const> members);

struct MergedEdges {
  std::vector<Hyperedge> hyperedges;
  /// Per hypernode, the number of superedges that landed inside it.
  std::vector<std::int64_t> folded;
};

MergedEdges emerge(std::span<const Superedge> superedges,
                   std::span<const std::uint32_t> hypernode_of, std::size_t hypernode_count);

/// Runs grouping, evaluation and merging. An empty `query_labels` means every
/// label of g. Labels absent from g are dropped, with a note in `warnings`.
Summary grasp(const PropertyGraph& g, const LabelSet& query_labels, HeuristicMode mode,
              std::vector<std::string>* warnings = nullptr);

}  // namespace grasp
