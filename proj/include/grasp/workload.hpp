#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "grasp/property_graph.hpp"

namespace grasp {

/// Requested query count per form, keyed by form name: single, optional,
/// inverse, plus, star, disjunction, concatenation.
struct WorkloadSpec {
  std::uint64_t seed = 1;
  std::map<std::string, std::size_t> counts;
};

WorkloadSpec parse_workload_spec(const nlohmann::json& doc);
WorkloadSpec load_workload_spec(std::istream& in);

/// Samples distinct queries per form without replacement from the labels of
/// g. A form yields fewer queries than requested once its candidates run out.
/// Output is grouped by form in the order listed above.
std::vector<std::string> generate_workload(const PropertyGraph& g, const WorkloadSpec& spec);

}  // namespace grasp
