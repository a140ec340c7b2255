#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "grasp/property_graph.hpp"

namespace grasp {

/// Reads the line-oriented format:
///   nodes: `<id>,<type_label>[,<key>=<value>;<key>=<value>...]`
///   edges: `<src_id>,<label>,<dst_id>[,<key>=<value>;...]`
/// Blank lines and lines starting with `#` are skipped. Values parse as integer,
/// then decimal; `null` or an empty value is undefined; anything else (or a
/// double-quoted string) is text.
PropertyGraph load_graph(std::istream& nodes, std::istream& edges);

/// JSON mirror: `{"nodes": [{"id", "type_label", ...}], "edges": [{"src_id", "label", "dst_id", ...}]}`.
/// Keys other than the named fields are properties.
PropertyGraph load_graph_json(const nlohmann::json& doc);
PropertyGraph load_graph_json(std::istream& in);

void write_nodes(const PropertyGraph& g, std::ostream& out);
void write_edges(const PropertyGraph& g, std::ostream& out);
nlohmann::json graph_to_json(const PropertyGraph& g);

/// `path` is either a `.json` file or a prefix with `<prefix>.nodes.csv` and
/// `<prefix>.edges.csv` next to it.
PropertyGraph load_graph_path(const std::filesystem::path& path);
void save_graph_prefix(const PropertyGraph& g, const std::string& prefix);

/// FNV-1a digest of the canonical serialization, as 16 hex digits.
std::string graph_digest(const PropertyGraph& g);

PropertyValue parse_property_value(std::string_view text);
std::string format_property_value(const PropertyValue& value);

}  // namespace grasp
