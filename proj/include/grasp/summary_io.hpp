#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "grasp/summary.hpp"

namespace grasp {

/// Canonical form: object keys sorted, decimals rounded to 12 significant digits.
/// Composite map keys are written `l1|l2|d1|d2` and `l|d`.
nlohmann::json summary_to_json(const Summary& s);
Summary summary_from_json(const nlohmann::json& doc);

std::string dump_canonical(const nlohmann::json& doc);
double round_significant(double x);

void save_summary(const Summary& s, const std::filesystem::path& path);
Summary load_summary(const std::filesystem::path& path);

/// True for a JSON document that carries a summary rather than a graph.
bool looks_like_summary(const nlohmann::json& doc);

}  // namespace grasp
