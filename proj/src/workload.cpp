#include "grasp/workload.hpp"

#include <algorithm>
#include <istream>
#include <random>

#include "grasp/errors.hpp"

namespace grasp {

namespace {

const std::vector<std::string>& form_order() {
  static const std::vector<std::string> forms{"single", "optional",    "inverse",      "plus",
                                              "star",   "disjunction", "concatenation"};
  return forms;
}

std::vector<std::string> candidates(const std::string& form, const std::vector<Label>& labels) {
  std::vector<std::string> out;
  for (const auto& a : labels) {
    const auto& s = a.str();
    if (form == "single") out.push_back("COUNT () -[" + s + "]-> ()");
    if (form == "optional") out.push_back("COUNT () -[" + s + "?]-> ()");
    if (form == "inverse") out.push_back("COUNT () <-[" + s + "]- ()");
    if (form == "plus") out.push_back("COUNT () -/" + s + "+/-> ()");
    if (form == "star") out.push_back("COUNT () -/" + s + "*/-> ()");
    for (const auto& b : labels) {
      const auto& t = b.str();
      if (form == "disjunction" && a < b) out.push_back("COUNT () -[" + s + "|" + t + "]-> ()");
      if (form == "concatenation") {
        out.push_back("COUNT () -[" + s + "]-> () <-[" + t + "]- ()");
        out.push_back("COUNT () -[" + s + "]-> () -[" + t + "]-> ()");
        out.push_back("COUNT () <-[" + s + "]- () <-[" + t + "]- ()");
        out.push_back("COUNT () <-[" + s + "]- () -[" + t + "]-> ()");
      }
    }
  }
  return out;
}

}  // namespace

WorkloadSpec parse_workload_spec(const nlohmann::json& doc) {
  WorkloadSpec spec;
  try {
    spec.seed = doc.value("seed", std::uint64_t{1});
    if (doc.contains("queries")) {
      for (const auto& [form, n] : doc.at("queries").items()) {
        if (std::find(form_order().begin(), form_order().end(), form) == form_order().end()) {
          throw InputError("workload: unknown query form '" + form + "'");
        }
        spec.counts[form] = n.get<std::size_t>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("workload: ") + e.what());
  }
  return spec;
}

WorkloadSpec load_workload_spec(std::istream& in) {
  try {
    return parse_workload_spec(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("workload: ") + e.what());
  }
}

std::vector<std::string> generate_workload(const PropertyGraph& g, const WorkloadSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<std::string> out;
  for (const auto& form : form_order()) {
    const auto it = spec.counts.find(form);
    if (it == spec.counts.end() || it->second == 0) continue;
    auto pool = candidates(form, g.labels());
    // Partial Fisher-Yates: the first n slots become a uniform sample.
    const auto n = std::min(it->second, pool.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
      out.push_back(pool[i]);
    }
  }
  return out;
}

}  // namespace grasp
