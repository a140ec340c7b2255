#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grasp/grouping.hpp"
#include "grasp/property_graph.hpp"

namespace grasp {

/// Direction index of an edge relative to a vertex v of a node:
/// 1 when the edge enters v (v is its target), 2 when it leaves v.
enum class Incidence : std::uint8_t { incoming = 1, outgoing = 2 };

constexpr int index_of(Incidence d) noexcept { return static_cast<int>(d); }
Incidence incidence_from_index(int d);

/// (l1, l2, d1, d2) key shared by EReach, the traversal count and RLPart.
struct TraversalKey {
  Label first;
  Label second;
  Incidence first_side = Incidence::incoming;
  Incidence second_side = Incidence::incoming;

  friend auto operator<=>(const TraversalKey&, const TraversalKey&) = default;
  friend bool operator==(const TraversalKey&, const TraversalKey&) = default;
};

/// (l, d) key of the frontier vertex counts.
struct FrontierKey {
  Label label;
  Incidence side = Incidence::incoming;

  friend auto operator<=>(const FrontierKey&, const FrontierKey&) = default;
  friend bool operator==(const FrontierKey&, const FrontierKey&) = default;
};

/// Statistics attached to supernodes and hypernodes. Maps are sparse: an
/// absent key reads as zero.
///
/// - vweight / eweight: inner vertices / inner edges.
/// - label_edges(l): inner edges labeled l; lpercent(l) = label_edges(l) / eweight.
/// - lreach(l): ordered pairs (u, v) joined by an inner l-path of length >= 1.
/// - ereach(l1, l2, d1, d2): ordered pairs of distinct cross-edges labeled l1, l2
///   meeting at a vertex v of the node, with v at side d1 of the first and d2 of
///   the second.
/// - traversal(l1, l2, d1, d2): pairs (cross-edge labeled l1, inner edge labeled l2)
///   meeting at v with the same side convention.
/// - frontier(l, d): vertices with at least one cross-edge labeled l at side d.
/// - rlpart(l1, l2, d1, d2) = traversal(l1, l2, d1, d2) / frontier(l1, d1).
/// - avg_sn_vweight: vweight divided by the number of fused supernodes.
struct AqpProperties {
  std::int64_t vweight = 0;
  std::int64_t eweight = 0;
  std::map<Label, std::int64_t> label_edges;
  std::map<Label, double> lpercent;
  std::map<Label, std::int64_t> lreach;
  std::map<TraversalKey, std::int64_t> ereach;
  std::map<TraversalKey, std::int64_t> traversal;
  std::map<FrontierKey, std::int64_t> frontier;
  std::map<TraversalKey, double> rlpart;
  double avg_sn_vweight = 0;

  double lpercent_of(const Label& l) const;
  std::int64_t label_edges_of(const Label& l) const;
  std::int64_t lreach_of(const Label& l) const;
  std::int64_t ereach_of(const TraversalKey& k) const;
  std::int64_t traversal_of(const TraversalKey& k) const;
  std::int64_t frontier_of(const FrontierKey& k) const;
  double rlpart_of(const TraversalKey& k) const;

  friend bool operator==(const AqpProperties&, const AqpProperties&) = default;
};

struct Supernode {
  std::uint32_t id = 0;
  std::vector<VertexId> members;        // ascending
  std::optional<Label> dominant_label;  // none for residual singletons
  AqpProperties props;
};

struct Superedge {
  std::uint32_t src = 0;
  Label label;
  std::uint32_t dst = 0;
  std::int64_t weight = 0;  // number of original cross-edges

  friend bool operator==(const Superedge&, const Superedge&) = default;
};

struct Supergraph {
  std::vector<Supernode> supernodes;
  std::vector<Superedge> superedges;       // sorted by (src, label, dst)
  std::vector<std::uint32_t> supernode_of;  // per original vertex
};

/// Statistics of the node made of `members`, where `unit_of[v]` names the node
/// of every vertex of g; edges with both endpoints in the node are inner.
/// Only labels in `labels` are tabulated (vweight and eweight count everything).
AqpProperties compute_properties(const PropertyGraph& g, std::span<const VertexId> members,
                                 std::span<const std::uint32_t> unit_of, const LabelSet& labels);

/// One supernode per subgrouping, in grouping order, then one singleton per
/// residual vertex. Properties are left empty.
std::vector<Supernode> vfuse(const Partitioning& p);

/// Supernode statistics relative to the supernode partition `supernode_of`.
AqpProperties compute_sn_properties(const Supernode& sn, const PropertyGraph& g,
                                    std::span<const std::uint32_t> supernode_of,
                                    const LabelSet& labels);

/// Fuses cross-edges sharing (source supernode, label, target supernode).
std::vector<Superedge> efuse(std::span<const std::uint32_t> supernode_of, const PropertyGraph& g);

Supergraph evaluate_phase(const Partitioning& p, const PropertyGraph& g, const LabelSet& labels);

/// The label set used when callers pass an empty one: Λ(G).
LabelSet all_labels(const PropertyGraph& g);

}  // namespace grasp
