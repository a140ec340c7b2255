#include "grasp/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "grasp/errors.hpp"

namespace grasp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t parse_id(std::string_view text, std::size_t line) {
  text = trim(text);
  std::uint64_t id = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("malformed vertex id '" + std::string(text) + "'", line);
  }
  return id;
}

Label parse_label(std::string_view text, std::size_t line) {
  text = trim(text);
  if (!Label::valid(text)) throw InputError("malformed label '" + std::string(text) + "'", line);
  return Label(std::string(text));
}

// Splits on `sep` outside double quotes.
std::vector<std::string_view> split_unquoted(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  bool quoted = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && quoted) {
      ++i;
    } else if (s[i] == '"') {
      quoted = !quoted;
    } else if (s[i] == sep && !quoted) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

PropertyMap parse_properties(std::string_view text, std::size_t line) {
  PropertyMap props;
  text = trim(text);
  if (text.empty()) return props;
  for (auto item : split_unquoted(text, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw InputError("malformed property '" + std::string(item) + "'", line);
    }
    std::string key(trim(item.substr(0, eq)));
    if (!props.emplace(key, parse_property_value(trim(item.substr(eq + 1)))).second) {
      throw InputError("duplicate property '" + key + "'", line);
    }
  }
  return props;
}

// Splits `line` into at most `n` comma-separated fields; the last keeps the remainder.
std::vector<std::string_view> split_fields(std::string_view line, std::size_t n) {
  std::vector<std::string_view> fields;
  while (fields.size() + 1 < n) {
    auto comma = line.find(',');
    if (comma == std::string_view::npos) break;
    fields.push_back(line.substr(0, comma));
    line.remove_prefix(comma + 1);
  }
  fields.push_back(line);
  return fields;
}

template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

std::string escape_text(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') throw InputError("text property values cannot contain newlines");
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_properties(const PropertyMap& props, std::ostream& out) {
  if (props.empty()) return;
  out << ',';
  bool first = true;
  for (const auto& [k, v] : props) {
    if (!first) out << ';';
    first = false;
    out << k << '=' << format_property_value(v);
  }
}

PropertyValue value_from_json(const nlohmann::json& v) {
  if (v.is_null()) return Undefined{};
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return static_cast<std::int64_t>(v.get<bool>() ? 1 : 0);
  throw InputError("unsupported JSON property value " + v.dump());
}

nlohmann::json value_to_json(const PropertyValue& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Undefined>) {
          return nullptr;
        } else {
          return x;
        }
      },
      v);
}

}  // namespace

PropertyValue parse_property_value(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "null") return Undefined{};
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
    std::string out;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
      if (text[i] == '\\' && i + 2 < text.size()) ++i;
      out.push_back(text[i]);
    }
    return out;
  }
  std::int64_t i = 0;
  auto [ip, iec] = std::from_chars(text.data(), text.data() + text.size(), i);
  if (iec == std::errc{} && ip == text.data() + text.size()) return i;
  double d = 0;
  auto [dp, dec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (dec == std::errc{} && dp == text.data() + text.size() && std::isfinite(d)) return d;
  return std::string(text);
}

std::string format_property_value(const PropertyValue& value) {
  if (std::holds_alternative<Undefined>(value)) return "null";
  if (auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  if (auto* d = std::get_if<double>(&value)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    std::string s = buf;
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
  }
  return escape_text(std::get<std::string>(value));
}

PropertyGraph load_graph(std::istream& nodes, std::istream& edges) {
  PropertyGraph::Builder b;
  for_each_record(nodes, [&](std::string_view line, std::size_t no) {
    auto fields = split_fields(line, 3);
    if (fields.size() < 2) throw InputError("nodes: expected '<id>,<type_label>'", no);
    const auto id = parse_id(fields[0], no);
    auto type = parse_label(fields[1], no);
    auto props = fields.size() == 3 ? parse_properties(fields[2], no) : PropertyMap{};
    if (b.find_external(id)) throw InputError("nodes: duplicate vertex id " + std::to_string(id), no);
    b.add_vertex(std::move(type), std::move(props), id);
  });
  for_each_record(edges, [&](std::string_view line, std::size_t no) {
    auto fields = split_fields(line, 4);
    if (fields.size() < 3) throw InputError("edges: expected '<src_id>,<label>,<dst_id>'", no);
    const auto src = parse_id(fields[0], no);
    auto label = parse_label(fields[1], no);
    const auto dst = parse_id(fields[2], no);
    auto props = fields.size() == 4 ? parse_properties(fields[3], no) : PropertyMap{};
    auto s = b.find_external(src);
    auto d = b.find_external(dst);
    if (!s || !d) {
      throw InputError("edges: dangling endpoint " + std::to_string(s ? dst : src), no);
    }
    b.add_edge(*s, std::move(label), *d, std::move(props));
  });
  return std::move(b).build();
}

PropertyGraph load_graph_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("graph JSON must be an object");
  PropertyGraph::Builder b;
  std::size_t index = 0;
  auto require = [&](const nlohmann::json& obj, const char* key) -> const nlohmann::json& {
    if (!obj.is_object() || !obj.contains(key)) {
      throw InputError(std::string("record ") + std::to_string(index) + " lacks '" + key + "'");
    }
    return obj.at(key);
  };
  try {
    if (doc.contains("nodes")) {
      for (const auto& n : doc.at("nodes")) {
        ++index;
        const auto id = require(n, "id").get<std::uint64_t>();
        Label type(require(n, "type_label").get<std::string>());
        PropertyMap props;
        for (const auto& [k, v] : n.items()) {
          if (k != "id" && k != "type_label") props.emplace(k, value_from_json(v));
        }
        if (b.find_external(id)) throw InputError("duplicate vertex id " + std::to_string(id));
        b.add_vertex(std::move(type), std::move(props), id);
      }
    }
    index = 0;
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        ++index;
        const auto src = require(e, "src_id").get<std::uint64_t>();
        Label label(require(e, "label").get<std::string>());
        const auto dst = require(e, "dst_id").get<std::uint64_t>();
        PropertyMap props;
        for (const auto& [k, v] : e.items()) {
          if (k != "src_id" && k != "label" && k != "dst_id") props.emplace(k, value_from_json(v));
        }
        auto s = b.find_external(src);
        auto d = b.find_external(dst);
        if (!s || !d) throw InputError("dangling endpoint " + std::to_string(s ? dst : src));
        b.add_edge(*s, std::move(label), *d, std::move(props));
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("graph JSON: ") + ex.what());
  }
  return std::move(b).build();
}

PropertyGraph load_graph_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("graph JSON: ") + ex.what());
  }
  return load_graph_json(doc);
}

void write_nodes(const PropertyGraph& g, std::ostream& out) {
  for (const auto& v : g.vertices()) {
    out << g.external_id(v.id) << ',' << v.type;
    write_properties(v.properties, out);
    out << '\n';
  }
}

void write_edges(const PropertyGraph& g, std::ostream& out) {
  for (const auto& e : g.edges()) {
    out << g.external_id(e.src) << ',' << g.label(e.label) << ',' << g.external_id(e.dst);
    write_properties(e.properties, out);
    out << '\n';
  }
}

nlohmann::json graph_to_json(const PropertyGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& v : g.vertices()) {
    nlohmann::json n = {{"id", g.external_id(v.id)}, {"type_label", v.type.str()}};
    for (const auto& [k, val] : v.properties) n[k] = value_to_json(val);
    nodes.push_back(std::move(n));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    nlohmann::json j = {{"src_id", g.external_id(e.src)},
                        {"label", g.label(e.label).str()},
                        {"dst_id", g.external_id(e.dst)}};
    for (const auto& [k, val] : e.properties) j[k] = value_to_json(val);
    edges.push_back(std::move(j));
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

PropertyGraph load_graph_path(const std::filesystem::path& path) {
  if (path.extension() == ".json") {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return load_graph_json(in);
  }
  const std::filesystem::path nodes_path = path.string() + ".nodes.csv";
  const std::filesystem::path edges_path = path.string() + ".edges.csv";
  std::ifstream nodes(nodes_path), edges(edges_path);
  if (!nodes) throw InputError("cannot open " + nodes_path.string());
  if (!edges) throw InputError("cannot open " + edges_path.string());
  return load_graph(nodes, edges);
}

void save_graph_prefix(const PropertyGraph& g, const std::string& prefix) {
  std::ofstream nodes(prefix + ".nodes.csv"), edges(prefix + ".edges.csv");
  if (!nodes || !edges) throw InputError("cannot write graph files with prefix " + prefix);
  write_nodes(g, nodes);
  write_edges(g, edges);
}

std::string graph_digest(const PropertyGraph& g) {
  std::ostringstream text;
  write_nodes(g, text);
  text << "--\n";
  write_edges(g, text);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace grasp
