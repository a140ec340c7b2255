#include "grasp/translate.hpp"

#include <algorithm>

#include "grasp/errors.hpp"

namespace grasp {

NodeEstimate parse_node_estimate(std::string_view text) {
  if (text == "exact") return NodeEstimate::exact;
  if (text == "weighted") return NodeEstimate::weighted;
  throw InputError("unknown node estimate '" + std::string(text) +
                   "' (expected exact or weighted)");
}

std::string to_string(NodeEstimate mode) {
  return mode == NodeEstimate::exact ? "exact" : "weighted";
}

namespace {

NodeAgg node_term(NodeAgg::Expr expr, const Label& first, const Label& second = {}) {
  NodeAgg t;
  t.expr = expr;
  t.first = first;
  t.second = second;
  return t;
}

NodeAgg node_count(NodeEstimate estimate) {
  NodeAgg t;
  t.expr = NodeAgg::Expr::node_count;
  t.estimate = estimate;
  return t;
}

EdgeAgg weight_term(const Label& l) {
  EdgeAgg t;
  t.label = l;
  return t;
}

void label_terms(std::vector<PlanTerm>& out, const Label& l) {
  out.push_back(node_term(NodeAgg::Expr::label_mass, l));
  out.push_back(weight_term(l));
}

std::vector<PlanTerm> concatenation_terms(const Concatenation& c) {
  std::vector<PlanTerm> out;
  // Inner l1 edge, cross l2 edge: read the l2 hyperedge end that holds the middle vertex.
  EdgeAgg cross_second;
  cross_second.expr = EdgeAgg::Expr::rlpart_weight;
  cross_second.label = c.second;
  cross_second.endpoint = c.second_side;
  cross_second.key = {c.second, c.first, c.second_side, c.first_side};
  cross_second.guard = c.first;
  out.push_back(cross_second);

  // Cross l1 edge, inner l2 edge.
  EdgeAgg cross_first;
  cross_first.expr = EdgeAgg::Expr::rlpart_weight;
  cross_first.label = c.first;
  cross_first.endpoint = c.first_side;
  cross_first.key = {c.first, c.second, c.first_side, c.second_side};
  cross_first.guard = c.second;
  out.push_back(cross_first);

  out.push_back(node_term(NodeAgg::Expr::min_percent, c.first, c.second));

  NodeAgg both_cross;
  both_cross.expr = NodeAgg::Expr::ereach;
  both_cross.key = {c.first, c.second, c.first_side, c.second_side};
  out.push_back(both_cross);
  return out;
}

std::string side_name(Incidence d) { return std::to_string(index_of(d)); }

std::string key_name(const TraversalKey& k) {
  return k.first.str() + "," + k.second.str() + "," + side_name(k.first_side) + "," +
         side_name(k.second_side);
}

}  // namespace

TranslatedPlan translate(const CountQuery& q, NodeEstimate estimate) {
  if (!q.filters.empty()) {
    throw UnsupportedFeature("filtered queries have no summary translation; use the exact engine");
  }
  TranslatedPlan plan;
  auto& t = plan.terms;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Epsilon>) {
          t.push_back(node_count(estimate));
        } else if constexpr (std::is_same_v<T, SingleLabel> || std::is_same_v<T, InverseLabel>) {
          label_terms(t, p.label);
        } else if constexpr (std::is_same_v<T, OptionalLabel>) {
          label_terms(t, p.label);
          t.push_back(node_count(estimate));
        } else if constexpr (std::is_same_v<T, KleenePlus> || std::is_same_v<T, KleeneStar>) {
          t.push_back(node_term(NodeAgg::Expr::lreach, p.label));
          t.push_back(weight_term(p.label));
          if constexpr (std::is_same_v<T, KleeneStar>) t.push_back(node_count(estimate));
        } else if constexpr (std::is_same_v<T, Disjunction>) {
          label_terms(t, p.first);
          label_terms(t, p.second);
        } else {
          t = concatenation_terms(p);
        }
      },
      q.path);
  return plan;
}

std::string describe(const PlanTerm& term) {
  if (const auto* n = std::get_if<NodeAgg>(&term)) {
    switch (n->expr) {
      case NodeAgg::Expr::label_mass:
        return "sum over hypernodes of lpercent(" + n->first.str() + ") * eweight";
      case NodeAgg::Expr::node_count:
        return n->estimate == NodeEstimate::exact
                   ? "sum over hypernodes of vweight"
                   : "sum over hypernodes of avg_sn_vweight * vweight";
      case NodeAgg::Expr::lreach:
        return "sum over hypernodes of lreach(" + n->first.str() + ") where positive";
      case NodeAgg::Expr::min_percent:
        return "sum over hypernodes of eweight * min(lpercent(" + n->first.str() +
               "), lpercent(" + n->second.str() + "))";
      case NodeAgg::Expr::ereach:
        return "sum over hypernodes of ereach(" + key_name(n->key) + ")";
    }
  }
  const auto& e = std::get<EdgeAgg>(term);
  if (e.expr == EdgeAgg::Expr::weight) {
    return "sum over " + e.label.str() + " hyperedges of weight";
  }
  const std::string end = e.endpoint == Incidence::incoming ? "target" : "source";
  return "sum over " + e.label.str() + " hyperedges of " + end + ".rlpart(" + key_name(e.key) +
         ") * weight where " + end + ".lpercent(" + e.guard.str() + ") > 0";
}

double eval_term(const Summary& s, const PlanTerm& term, const std::vector<bool>& in_region) {
  double total = 0;
  if (const auto* n = std::get_if<NodeAgg>(&term)) {
    for (const auto& hn : s.hypernodes) {
      if (!in_region[hn.id]) continue;
      const auto& p = hn.props;
      switch (n->expr) {
        case NodeAgg::Expr::label_mass:
          // Integer inner counts give lpercent · eweight without rounding.
          total += static_cast<double>(p.label_edges_of(n->first));
          break;
        case NodeAgg::Expr::node_count:
          total += n->estimate == NodeEstimate::exact
                       ? static_cast<double>(p.vweight)
                       : p.avg_sn_vweight * static_cast<double>(p.vweight);
          break;
        case NodeAgg::Expr::lreach:
          if (p.lreach_of(n->first) > 0) total += static_cast<double>(p.lreach_of(n->first));
          break;
        case NodeAgg::Expr::min_percent:
          total += static_cast<double>(p.eweight) *
                   std::min(p.lpercent_of(n->first), p.lpercent_of(n->second));
          break;
        case NodeAgg::Expr::ereach:
          total += static_cast<double>(p.ereach_of(n->key));
          break;
      }
    }
    return total;
  }
  const auto& e = std::get<EdgeAgg>(term);
  for (const auto& he : s.hyperedges) {
    if (he.label != e.label || !in_region[he.src] || !in_region[he.dst]) continue;
    const auto w = static_cast<double>(he.weight);
    if (e.expr == EdgeAgg::Expr::weight) {
      total += w;
      continue;
    }
    const auto& end = s.hypernodes[e.endpoint == Incidence::incoming ? he.dst : he.src].props;
    if (end.lpercent_of(e.guard) > 0) total += end.rlpart_of(e.key) * w;
  }
  return total;
}

CountResult eval_approx(const Summary& s, const TranslatedPlan& plan,
                        const std::optional<std::vector<std::uint32_t>>& region) {
  std::vector<bool> in_region(s.hypernodes.size(), !region.has_value());
  if (region) {
    for (auto id : *region) {
      if (id >= s.hypernodes.size()) {
        throw QueryError("region names unknown hypernode " + std::to_string(id));
      }
      in_region[id] = true;
    }
  }
  double total = 0;
  for (const auto& term : plan.terms) total += eval_term(s, term, in_region);
  return {total, false};
}

}  // namespace grasp
