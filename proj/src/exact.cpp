#include "grasp/exact.hpp"

#include <algorithm>

#include "grasp/errors.hpp"

namespace grasp {

namespace {

std::int64_t label_count(const PropertyGraph& g, const Label& l) {
  const auto id = g.find_label(l);
  if (!id) return 0;
  std::int64_t n = 0;
  for (EdgeId e : g.edges_with_label(*id)) n += g.edge(e).label == *id ? 1 : 0;
  return n;
}

std::int64_t plus_pairs(const PropertyGraph& g, const Label& l) {
  const auto id = g.find_label(l);
  if (!id) return 0;
  const auto n = g.vertex_count();
  std::vector<std::vector<VertexId>> adj(n);
  for (EdgeId e : g.edges_with_label(*id)) adj[g.edge(e).src].push_back(g.edge(e).dst);
  std::int64_t total = 0;
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (adj[s].empty()) continue;
    ++stamp;
    queue.clear();
    for (auto t : adj[s])
      if (seen[t] != stamp) seen[t] = stamp, queue.push_back(t);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto t : adj[queue[head]])
        if (seen[t] != stamp) seen[t] = stamp, queue.push_back(t);
    total += static_cast<std::int64_t>(queue.size());
  }
  return total;
}

class FilterCheck {
 public:
  FilterCheck(const PropertyGraph& g, const std::vector<Filter>& filters)
      : g_(g), filters_(filters) {}

  bool empty() const { return filters_.empty(); }

  // `nodes[i]` is the vertex bound to node pattern i.
  bool accepts(std::initializer_list<VertexId> nodes) const {
    for (const auto& f : filters_) {
      const auto v = *(nodes.begin() + f.node);
      const auto& props = g_.vertex(v).properties;
      const auto it = props.find(f.property);
      if (it == props.end()) return false;
      const auto x = numeric_value(it->second, f.property);
      if (!x || !f.accepts(*x)) return false;
    }
    return true;
  }

 private:
  const PropertyGraph& g_;
  const std::vector<Filter>& filters_;
};

std::int64_t filtered_edges(const PropertyGraph& g, const Label& l, bool reversed,
                            const FilterCheck& check) {
  const auto id = g.find_label(l);
  if (!id) return 0;
  std::int64_t n = 0;
  for (EdgeId e : g.edges_with_label(*id)) {
    const auto& edge = g.edge(e);
    n += (reversed ? check.accepts({edge.dst, edge.src}) : check.accepts({edge.src, edge.dst}))
             ? 1
             : 0;
  }
  return n;
}

std::int64_t concatenations(const PropertyGraph& g, const Concatenation& c,
                            const FilterCheck& check) {
  const auto l1 = g.find_label(c.first);
  const auto l2 = g.find_label(c.second);
  if (!l1 || !l2) return 0;
  auto incident = [&](VertexId v, Incidence side, LabelId l) {
    std::vector<EdgeId> out;
    for (EdgeId e : side == Incidence::incoming ? g.in_edges(v) : g.out_edges(v)) {
      if (g.edge(e).label == l) out.push_back(e);
    }
    return out;
  };
  auto far_end = [&](EdgeId e, Incidence side) {
    return side == Incidence::incoming ? g.edge(e).src : g.edge(e).dst;
  };
  std::int64_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto a = incident(v, c.first_side, *l1);
    if (a.empty()) continue;
    const auto b = incident(v, c.second_side, *l2);
    if (check.empty()) {
      std::int64_t shared = 0;
      for (EdgeId e : a) shared += std::count(b.begin(), b.end(), e);
      total += static_cast<std::int64_t>(a.size() * b.size()) - shared;
      continue;
    }
    for (EdgeId e1 : a)
      for (EdgeId e2 : b)
        if (e1 != e2 && check.accepts({far_end(e1, c.first_side), v, far_end(e2, c.second_side)}))
          ++total;
  }
  return total;
}

std::size_t node_patterns(const PathExpr& path) {
  if (std::holds_alternative<Epsilon>(path)) return 1;
  return std::holds_alternative<Concatenation>(path) ? 3 : 2;
}

void check_filters(const CountQuery& q) {
  if (q.filters.empty()) return;
  if (!std::holds_alternative<SingleLabel>(q.path) &&
      !std::holds_alternative<InverseLabel>(q.path) &&
      !std::holds_alternative<Concatenation>(q.path)) {
    throw QueryError("filter attached to unsupported path form");
  }
  for (const auto& f : q.filters) {
    if (f.node >= node_patterns(q.path)) throw QueryError("filter bound to a missing node");
  }
}

}  // namespace

CountResult eval_exact(const PropertyGraph& g, const CountQuery& q) {
  check_filters(q);
  const FilterCheck check(g, q.filters);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const std::int64_t value = std::visit(
      [&](const auto& p) -> std::int64_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Epsilon>) {
          return n;
        } else if constexpr (std::is_same_v<T, SingleLabel>) {
          return check.empty() ? label_count(g, p.label) : filtered_edges(g, p.label, false, check);
        } else if constexpr (std::is_same_v<T, InverseLabel>) {
          return check.empty() ? label_count(g, p.label) : filtered_edges(g, p.label, true, check);
        } else if constexpr (std::is_same_v<T, OptionalLabel>) {
          return label_count(g, p.label) + n;
        } else if constexpr (std::is_same_v<T, KleenePlus>) {
          return plus_pairs(g, p.label);
        } else if constexpr (std::is_same_v<T, KleeneStar>) {
          return plus_pairs(g, p.label) + n;
        } else if constexpr (std::is_same_v<T, Disjunction>) {
          return label_count(g, p.first) + label_count(g, p.second);
        } else {
          return concatenations(g, p, check);
        }
      },
      q.path);
  return {static_cast<double>(value), true};
}

}  // namespace grasp
