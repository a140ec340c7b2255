#include "grasp/summary.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "grasp/errors.hpp"
#include "grasp/graph_io.hpp"

namespace grasp {

HeuristicMode parse_mode(std::string_view text) {
  if (text == "target" || text == "target-merge") return HeuristicMode::target;
  if (text == "source" || text == "source-merge") return HeuristicMode::source;
  throw InputError("unknown heuristic mode '" + std::string(text) + "' (expected target or source)");
}

std::string to_string(HeuristicMode mode) {
  return mode == HeuristicMode::target ? "target" : "source";
}

std::int64_t Summary::total_vweight() const {
  std::int64_t n = 0;
  for (const auto& hn : hypernodes) n += hn.props.vweight;
  return n;
}

std::int64_t Summary::total_eweight() const {
  std::int64_t n = 0;
  for (const auto& hn : hypernodes) n += hn.props.eweight;
  return n;
}

std::int64_t Summary::total_hyperedge_weight() const {
  std::int64_t n = 0;
  for (const auto& he : hyperedges) n += he.weight;
  return n;
}

std::vector<Hypernode> vmerge(const Supergraph& sg, const LabelSet& labels, HeuristicMode mode,
                              std::vector<std::uint32_t>& hypernode_of) {
  std::vector<LabelSet> key_labels(sg.supernodes.size());
  for (const auto& se : sg.superedges) {
    if (!labels.contains(se.label)) continue;
    const auto owner = mode == HeuristicMode::target ? se.dst : se.src;
    key_labels[owner].insert(se.label);
  }

  using Key = std::pair<std::optional<Label>, LabelSet>;
  std::map<Key, std::uint32_t> classes;
  std::vector<Hypernode> out;
  hypernode_of.assign(sg.supernodes.size(), 0);
  for (const auto& sn : sg.supernodes) {
    Key key{sn.dominant_label, std::move(key_labels[sn.id])};
    auto [it, fresh] = classes.try_emplace(std::move(key), static_cast<std::uint32_t>(out.size()));
    if (fresh) out.push_back(Hypernode{it->second, {}, sn.dominant_label, {}, 0});
    out[it->second].members.push_back(sn.id);
    ++out[it->second].supernode_count;
    hypernode_of[sn.id] = it->second;
  }
  return out;
}

AqpProperties merge_hn_properties(std::span<const AqpProperties* const> members) {
  AqpProperties p;
  std::map<Label, double> weighted;
  for (const auto* m : members) {
    p.vweight += m->vweight;
    p.eweight += m->eweight;
    for (const auto& [l, n] : m->label_edges) p.label_edges[l] += n;
    for (const auto& [l, x] : m->lpercent) weighted[l] += x * static_cast<double>(m->eweight);
    for (const auto& [l, n] : m->lreach) p.lreach[l] += n;
    for (const auto& [k, n] : m->ereach) p.ereach[k] += n;
    for (const auto& [k, n] : m->traversal) p.traversal[k] += n;
    for (const auto& [k, n] : m->frontier) p.frontier[k] += n;
  }
  if (p.eweight > 0) {
    for (const auto& [l, x] : weighted) {
      if (x > 0) p.lpercent[l] = x / static_cast<double>(p.eweight);
    }
  }
  for (const auto& [k, d] : p.traversal) {
    const auto f = p.frontier_of({k.first, k.first_side});
    p.rlpart[k] = f == 0 ? 0.0 : static_cast<double>(d) / static_cast<double>(f);
  }
  if (!members.empty()) {
    p.avg_sn_vweight = static_cast<double>(p.vweight) / static_cast<double>(members.size());
  }
  return p;
}

MergedEdges emerge(std::span<const Superedge> superedges,
                   std::span<const std::uint32_t> hypernode_of, std::size_t hypernode_count) {
  MergedEdges out;
  out.folded.assign(hypernode_count, 0);
  std::map<std::tuple<std::uint32_t, Label, std::uint32_t>, Hyperedge> fused;
  for (const auto& se : superedges) {
    const auto s = hypernode_of[se.src];
    const auto d = hypernode_of[se.dst];
    if (s == d) {
      ++out.folded[s];
      continue;
    }
    auto& he = fused[{s, se.label, d}];
    he.src = s;
    he.label = se.label;
    he.dst = d;
    he.weight += se.weight;
    ++he.superedge_count;
  }
  out.hyperedges.reserve(fused.size());
  for (auto& [key, he] : fused) out.hyperedges.push_back(std::move(he));
  return out;
}

Summary grasp(const PropertyGraph& g, const LabelSet& query_labels, HeuristicMode mode,
              std::vector<std::string>* warnings) {
  Summary s;
  s.mode = mode;
  s.source_graph_digest = graph_digest(g);
  if (query_labels.empty()) {
    s.query_labels = all_labels(g);
  } else {
    for (const auto& l : query_labels) {
      if (g.find_label(l)) {
        s.query_labels.insert(l);
      } else if (warnings) {
        warnings->push_back("label '" + l.str() + "' does not occur in the graph; ignored");
      }
    }
  }

  const auto sg = evaluate_phase(grouping(g), g, s.query_labels);
  std::vector<std::uint32_t> hn_of_sn;
  s.hypernodes = vmerge(sg, s.query_labels, mode, hn_of_sn);
  auto merged = emerge(sg.superedges, hn_of_sn, s.hypernodes.size());
  s.hyperedges = std::move(merged.hyperedges);

  std::vector<std::uint32_t> hn_of_vertex;
  for (auto& hn : s.hypernodes) {
    if (merged.folded[hn.id] == 0) {
      std::vector<const AqpProperties*> parts;
      for (auto m : hn.members) parts.push_back(&sg.supernodes[m].props);
      hn.props = merge_hn_properties(parts);
      continue;
    }
    // Former cross-edges are inner now; recount from the union subgraph.
    if (hn_of_vertex.empty()) {
      hn_of_vertex.resize(g.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) hn_of_vertex[v] = hn_of_sn[sg.supernode_of[v]];
    }
    std::vector<VertexId> vertices;
    for (auto m : hn.members) {
      const auto& mv = sg.supernodes[m].members;
      vertices.insert(vertices.end(), mv.begin(), mv.end());
    }
    std::sort(vertices.begin(), vertices.end());
    hn.props = compute_properties(g, vertices, hn_of_vertex, s.query_labels);
    hn.props.avg_sn_vweight =
        static_cast<double>(hn.props.vweight) / static_cast<double>(hn.members.size());
  }
  return s;
}

}  // namespace grasp
