#include "grasp/supergraph.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "grasp/errors.hpp"

namespace grasp {

Incidence incidence_from_index(int d) {
  if (d == 1) return Incidence::incoming;
  if (d == 2) return Incidence::outgoing;
  throw InputError("direction index must be 1 or 2, got " + std::to_string(d));
}

namespace {

template <class Map, class Key>
auto lookup(const Map& m, const Key& k) -> typename Map::mapped_type {
  const auto it = m.find(k);
  return it == m.end() ? typename Map::mapped_type{} : it->second;
}

// Ordered pairs reachable through l-edges, BFS from every vertex with an out-edge.
std::int64_t reachable_pairs(const std::vector<std::vector<std::uint32_t>>& adj) {
  const auto n = adj.size();
  std::int64_t total = 0;
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (adj[s].empty()) continue;
    ++stamp;
    queue.clear();
    for (auto t : adj[s]) {
      if (seen[t] != stamp) {
        seen[t] = stamp;
        queue.push_back(t);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto t : adj[queue[head]]) {
        if (seen[t] != stamp) {
          seen[t] = stamp;
          queue.push_back(t);
        }
      }
    }
    total += static_cast<std::int64_t>(queue.size());
  }
  return total;
}

}  // namespace

double AqpProperties::lpercent_of(const Label& l) const { return lookup(lpercent, l); }
std::int64_t AqpProperties::label_edges_of(const Label& l) const { return lookup(label_edges, l); }
std::int64_t AqpProperties::lreach_of(const Label& l) const { return lookup(lreach, l); }
std::int64_t AqpProperties::ereach_of(const TraversalKey& k) const { return lookup(ereach, k); }
std::int64_t AqpProperties::traversal_of(const TraversalKey& k) const {
  return lookup(traversal, k);
}
std::int64_t AqpProperties::frontier_of(const FrontierKey& k) const { return lookup(frontier, k); }
double AqpProperties::rlpart_of(const TraversalKey& k) const { return lookup(rlpart, k); }

LabelSet all_labels(const PropertyGraph& g) {
  return LabelSet(g.labels().begin(), g.labels().end());
}

AqpProperties compute_properties(const PropertyGraph& g, std::span<const VertexId> members,
                                 std::span<const std::uint32_t> unit_of, const LabelSet& labels) {
  AqpProperties p;
  p.vweight = static_cast<std::int64_t>(members.size());
  p.avg_sn_vweight = static_cast<double>(p.vweight);
  if (members.empty()) return p;
  const auto unit = unit_of[members.front()];

  // Which label ids are tabulated.
  std::vector<bool> tracked(g.labels().size(), false);
  for (LabelId l = 0; l < g.labels().size(); ++l) tracked[l] = labels.contains(g.label(l));

  std::unordered_map<VertexId, std::uint32_t> local;
  local.reserve(members.size());
  for (std::uint32_t i = 0; i < members.size(); ++i) local.emplace(members[i], i);

  std::map<LabelId, std::vector<std::vector<std::uint32_t>>> label_adj;

  using SideKey = std::pair<LabelId, Incidence>;
  std::map<SideKey, std::int64_t> cross, inner;
  for (VertexId v : members) {
    cross.clear();
    inner.clear();
    for (EdgeId e : g.out_edges(v)) {
      const auto& edge = g.edge(e);
      const bool is_inner = unit_of[edge.dst] == unit;
      if (is_inner) {
        ++p.eweight;
        if (tracked[edge.label]) {
          ++p.label_edges[g.label(edge.label)];
          auto& adj = label_adj[edge.label];
          if (adj.empty()) adj.resize(members.size());
          adj[local.at(v)].push_back(local.at(edge.dst));
        }
      }
      if (!tracked[edge.label]) continue;
      ++(is_inner ? inner : cross)[{edge.label, Incidence::outgoing}];
    }
    for (EdgeId e : g.in_edges(v)) {
      const auto& edge = g.edge(e);
      if (!tracked[edge.label]) continue;
      ++(unit_of[edge.src] == unit ? inner : cross)[{edge.label, Incidence::incoming}];
    }

    for (const auto& [a, ca] : cross) {
      const FrontierKey fa{g.label(a.first), a.second};
      ++p.frontier[fa];
      for (const auto& [b, cb] : cross) {
        const auto pairs = ca * cb - (a == b ? ca : 0);
        if (pairs > 0) p.ereach[{fa.label, g.label(b.first), a.second, b.second}] += pairs;
      }
      for (const auto& [b, ib] : inner) {
        p.traversal[{fa.label, g.label(b.first), a.second, b.second}] += ca * ib;
      }
    }
  }

  for (const auto& [l, count] : p.label_edges) {
    p.lpercent[l] = static_cast<double>(count) / static_cast<double>(p.eweight);
  }
  for (const auto& [l, adj] : label_adj) {
    const auto pairs = reachable_pairs(adj);
    if (pairs > 0) p.lreach[g.label(l)] = pairs;
  }
  for (const auto& [k, d] : p.traversal) {
    const auto f = p.frontier_of({k.first, k.first_side});
    p.rlpart[k] = f == 0 ? 0.0 : static_cast<double>(d) / static_cast<double>(f);
  }
  return p;
}

std::vector<Supernode> vfuse(const Partitioning& p) {
  std::vector<Supernode> out;
  for (const auto& grouping : p.groupings) {
    for (const auto& sub : grouping.subgroupings) {
      out.push_back(Supernode{static_cast<std::uint32_t>(out.size()), sub.vertices,
                              sub.dominant_label, {}});
    }
  }
  for (VertexId v : p.residual) {
    out.push_back(Supernode{static_cast<std::uint32_t>(out.size()), {v}, std::nullopt, {}});
  }
  return out;
}

AqpProperties compute_sn_properties(const Supernode& sn, const PropertyGraph& g,
                                    std::span<const std::uint32_t> supernode_of,
                                    const LabelSet& labels) {
  return compute_properties(g, sn.members, supernode_of, labels);
}

std::vector<Superedge> efuse(std::span<const std::uint32_t> supernode_of, const PropertyGraph& g) {
  std::map<std::tuple<std::uint32_t, Label, std::uint32_t>, std::int64_t> fused;
  for (const auto& edge : g.edges()) {
    const auto s = supernode_of[edge.src];
    const auto d = supernode_of[edge.dst];
    if (s != d) ++fused[{s, g.label(edge.label), d}];
  }
  std::vector<Superedge> out;
  out.reserve(fused.size());
  for (const auto& [key, weight] : fused) {
    out.push_back(Superedge{std::get<0>(key), std::get<1>(key), std::get<2>(key), weight});
  }
  return out;
}

Supergraph evaluate_phase(const Partitioning& p, const PropertyGraph& g, const LabelSet& labels) {
  Supergraph sg;
  sg.supernodes = vfuse(p);
  sg.supernode_of.assign(g.vertex_count(), 0);
  for (const auto& sn : sg.supernodes) {
    for (VertexId v : sn.members) sg.supernode_of[v] = sn.id;
  }
  for (auto& sn : sg.supernodes) sn.props = compute_sn_properties(sn, g, sg.supernode_of, labels);
  sg.superedges = efuse(sg.supernode_of, g);
  return sg;
}

}  // namespace grasp
