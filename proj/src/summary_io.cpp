#include "grasp/summary_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "grasp/errors.hpp"

namespace grasp {

using nlohmann::json;

namespace {

std::string traversal_key(const TraversalKey& k) {
  return k.first.str() + "|" + k.second.str() + "|" + std::to_string(index_of(k.first_side)) +
         "|" + std::to_string(index_of(k.second_side));
}

std::string frontier_key(const FrontierKey& k) {
  return k.label.str() + "|" + std::to_string(index_of(k.side));
}

std::vector<std::string> split_bars(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Incidence parse_side(const std::string& text) {
  if (text == "1") return Incidence::incoming;
  if (text == "2") return Incidence::outgoing;
  throw InputError("summary: bad direction index '" + text + "'");
}

TraversalKey parse_traversal_key(const std::string& text) {
  const auto p = split_bars(text);
  if (p.size() != 4) throw InputError("summary: bad key '" + text + "'");
  return {Label(p[0]), Label(p[1]), parse_side(p[2]), parse_side(p[3])};
}

FrontierKey parse_frontier_key(const std::string& text) {
  const auto p = split_bars(text);
  if (p.size() != 2) throw InputError("summary: bad key '" + text + "'");
  return {Label(p[0]), parse_side(p[1])};
}

template <class Map, class KeyFn, class ValueFn>
json map_to_json(const Map& m, KeyFn key, ValueFn value) {
  json out = json::object();
  for (const auto& [k, v] : m) out[key(k)] = value(v);
  return out;
}

json props_to_json(const AqpProperties& p) {
  const auto label_key = [](const Label& l) { return l.str(); };
  const auto ident = [](std::int64_t n) { return n; };
  const auto real = [](double x) { return round_significant(x); };
  json j;
  j["vweight"] = p.vweight;
  j["eweight"] = p.eweight;
  j["label_edges"] = map_to_json(p.label_edges, label_key, ident);
  j["lpercent"] = map_to_json(p.lpercent, label_key, real);
  j["lreach"] = map_to_json(p.lreach, label_key, ident);
  j["ereach"] = map_to_json(p.ereach, traversal_key, ident);
  j["traversal"] = map_to_json(p.traversal, traversal_key, ident);
  j["frontier"] = map_to_json(p.frontier, frontier_key, ident);
  j["rlpart"] = map_to_json(p.rlpart, traversal_key, real);
  j["avg_sn_vweight"] = round_significant(p.avg_sn_vweight);
  return j;
}

const json& section(const json& j, const char* key) {
  static const json empty = json::object();
  const auto it = j.find(key);
  return it == j.end() ? empty : *it;
}

AqpProperties props_from_json(const json& j) {
  AqpProperties p;
  p.vweight = j.at("vweight").get<std::int64_t>();
  p.eweight = j.at("eweight").get<std::int64_t>();
  for (const auto& [k, v] : section(j, "label_edges").items())
    p.label_edges[Label(k)] = v.get<std::int64_t>();
  for (const auto& [k, v] : section(j, "lpercent").items())
    p.lpercent[Label(k)] = v.get<double>();
  for (const auto& [k, v] : section(j, "lreach").items())
    p.lreach[Label(k)] = v.get<std::int64_t>();
  for (const auto& [k, v] : section(j, "ereach").items())
    p.ereach[parse_traversal_key(k)] = v.get<std::int64_t>();
  for (const auto& [k, v] : section(j, "traversal").items())
    p.traversal[parse_traversal_key(k)] = v.get<std::int64_t>();
  for (const auto& [k, v] : section(j, "frontier").items())
    p.frontier[parse_frontier_key(k)] = v.get<std::int64_t>();
  for (const auto& [k, v] : section(j, "rlpart").items())
    p.rlpart[parse_traversal_key(k)] = v.get<double>();
  p.avg_sn_vweight = j.value("avg_sn_vweight", 0.0);
  return p;
}

}  // namespace

double round_significant(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json summary_to_json(const Summary& s) {
  json j;
  j["mode"] = to_string(s.mode);
  j["source_graph_digest"] = s.source_graph_digest;
  j["query_labels"] = json::array();
  for (const auto& l : s.query_labels) j["query_labels"].push_back(l.str());
  j["hypernodes"] = json::array();
  for (const auto& hn : s.hypernodes) {
    json h = props_to_json(hn.props);
    h["id"] = hn.id;
    h["members"] = hn.members;
    h["dominant_label"] = hn.dominant_label ? json(hn.dominant_label->str()) : json(nullptr);
    h["supernode_count"] = hn.supernode_count;
    j["hypernodes"].push_back(std::move(h));
  }
  j["hyperedges"] = json::array();
  for (const auto& he : s.hyperedges) {
    j["hyperedges"].push_back({{"src", he.src},
                               {"label", he.label.str()},
                               {"dst", he.dst},
                               {"weight", he.weight},
                               {"superedge_count", he.superedge_count}});
  }
  return j;
}

Summary summary_from_json(const json& doc) {
  try {
    Summary s;
    s.mode = parse_mode(doc.at("mode").get<std::string>());
    s.source_graph_digest = doc.value("source_graph_digest", "");
    for (const auto& l : doc.at("query_labels")) s.query_labels.insert(Label(l.get<std::string>()));
    for (const auto& h : doc.at("hypernodes")) {
      Hypernode hn;
      hn.id = h.at("id").get<std::uint32_t>();
      if (hn.id != s.hypernodes.size()) throw InputError("summary: hypernode ids must be dense");
      hn.members = h.at("members").get<std::vector<std::uint32_t>>();
      if (!h.at("dominant_label").is_null())
        hn.dominant_label = Label(h.at("dominant_label").get<std::string>());
      hn.supernode_count = h.at("supernode_count").get<std::int64_t>();
      hn.props = props_from_json(h);
      s.hypernodes.push_back(std::move(hn));
    }
    for (const auto& e : doc.at("hyperedges")) {
      Hyperedge he{e.at("src").get<std::uint32_t>(), Label(e.at("label").get<std::string>()),
                   e.at("dst").get<std::uint32_t>(), e.at("weight").get<std::int64_t>(),
                   e.at("superedge_count").get<std::int64_t>()};
      if (he.src >= s.hypernodes.size() || he.dst >= s.hypernodes.size())
        throw InputError("summary: hyperedge endpoint out of range");
      s.hyperedges.push_back(std::move(he));
    }
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("summary: ") + e.what());
  }
}

std::string dump_canonical(const json& doc) { return doc.dump(2) + "\n"; }

void save_summary(const Summary& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << dump_canonical(summary_to_json(s));
}

Summary load_summary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return summary_from_json(doc);
}

bool looks_like_summary(const json& doc) {
  return doc.is_object() && doc.contains("hypernodes");
}

}  // namespace grasp
