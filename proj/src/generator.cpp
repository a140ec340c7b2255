#include "grasp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "grasp/errors.hpp"

namespace grasp {

std::size_t GraphSchema::edge_label_count() const {
  std::set<Label> labels;
  for (const auto& p : predicates) labels.insert(p.label);
  return labels.size();
}

namespace {

DegreeDistribution parse_distribution(const nlohmann::json& j) {
  DegreeDistribution d;
  const auto kind = j.value("distribution", std::string("uniform"));
  if (kind == "uniform") {
    d.kind = DegreeDistribution::Kind::uniform;
  } else if (kind == "zipfian") {
    d.kind = DegreeDistribution::Kind::zipfian;
  } else {
    throw InputError("unknown degree distribution '" + kind + "'");
  }
  d.min = j.value("min", 1u);
  d.max = j.value("max", d.min);
  d.alpha = j.value("alpha", 1.0);
  return d;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }

  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

  std::uint32_t degree(const DegreeDistribution& d) {
    if (d.kind == DegreeDistribution::Kind::uniform || d.min == d.max) {
      return static_cast<std::uint32_t>(uniform(d.min, d.max));
    }
    auto& cdf = zipf_cache_[{d.max - d.min + 1, d.alpha}];
    if (cdf.empty()) cdf = zipf_cdf(d.max - d.min + 1, d.alpha);
    return d.min + pick(cdf);
  }

  // Index in [0, cdf.size()) drawn from a cumulative distribution.
  std::size_t pick(const std::vector<double>& cdf) {
    const double u = unit() * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
  }

  static std::vector<double> zipf_cdf(std::size_t n, double alpha) {
    std::vector<double> cdf(n);
    double acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += std::pow(static_cast<double>(k + 1), -alpha);
      cdf[k] = acc;
    }
    return cdf;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::map<std::pair<std::uint32_t, double>, std::vector<double>> zipf_cache_;
};

std::vector<std::size_t> type_counts(const GraphSchema& schema, std::size_t target) {
  double total = 0;
  for (const auto& t : schema.vertex_types) total += t.proportion;
  std::vector<std::size_t> counts(schema.vertex_types.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double exact = schema.vertex_types[i].proportion / total * static_cast<double>(target);
    counts[i] = static_cast<std::size_t>(std::floor(exact));
    assigned += counts[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < target; ++k, ++assigned) {
    ++counts[remainders[k % remainders.size()].second];
  }
  return counts;
}

}  // namespace

void validate_schema(const GraphSchema& schema) {
  if (schema.vertex_types.empty()) throw InputError("schema declares no vertex types");
  std::set<Label> types;
  double total = 0;
  for (const auto& t : schema.vertex_types) {
    if (!types.insert(t.label).second) throw InputError("duplicate vertex type " + t.label.str());
    if (!(t.proportion >= 0) || !std::isfinite(t.proportion)) {
      throw InputError("vertex type " + t.label.str() + " has an invalid proportion");
    }
    for (const auto& p : t.properties) {
      if (p.name.empty() || p.min > p.max) {
        throw InputError("vertex type " + t.label.str() + " has an invalid property range");
      }
    }
    total += t.proportion;
  }
  if (total <= 0) throw InputError("vertex type proportions sum to zero");
  for (const auto& p : schema.predicates) {
    if (!types.count(p.source) || !types.count(p.target)) {
      throw InputError("predicate " + p.label.str() + " references an undeclared vertex type");
    }
    if (p.out_degree.min > p.out_degree.max || p.out_degree.alpha < 0 || p.target_skew < 0) {
      throw InputError("predicate " + p.label.str() + " has an invalid degree distribution");
    }
  }
}

nlohmann::json schema_to_json(const GraphSchema& schema) {
  using nlohmann::json;
  json j;
  j["name"] = schema.name;
  j["vertex_types"] = json::array();
  for (const auto& t : schema.vertex_types) {
    json props = json::array();
    for (const auto& p : t.properties) props.push_back({{"name", p.name}, {"min", p.min}, {"max", p.max}});
    json v = {{"label", t.label.str()}, {"proportion", t.proportion}};
    if (!props.empty()) v["properties"] = std::move(props);
    j["vertex_types"].push_back(std::move(v));
  }
  j["predicates"] = json::array();
  for (const auto& p : schema.predicates) {
    const auto& d = p.out_degree;
    json deg = {{"distribution", d.kind == DegreeDistribution::Kind::uniform ? "uniform" : "zipfian"},
                {"min", d.min},
                {"max", d.max}};
    if (d.kind == DegreeDistribution::Kind::zipfian) deg["alpha"] = d.alpha;
    json pj = {{"source", p.source.str()},
               {"label", p.label.str()},
               {"target", p.target.str()},
               {"out_degree", std::move(deg)}};
    if (p.target_skew != 0) pj["target_skew"] = p.target_skew;
    j["predicates"].push_back(std::move(pj));
  }
  return j;
}

GraphSchema parse_schema(const nlohmann::json& doc) {
  GraphSchema s;
  try {
    s.name = doc.value("name", std::string{});
    for (const auto& t : doc.at("vertex_types")) {
      VertexTypeSpec spec{Label(t.at("label").get<std::string>()), t.at("proportion").get<double>(),
                          {}};
      if (t.contains("properties")) {
        for (const auto& p : t.at("properties")) {
          spec.properties.push_back({p.at("name").get<std::string>(), p.at("min").get<std::int64_t>(),
                                     p.at("max").get<std::int64_t>()});
        }
      }
      s.vertex_types.push_back(std::move(spec));
    }
    for (const auto& p : doc.at("predicates")) {
      s.predicates.push_back({Label(p.at("source").get<std::string>()),
                              Label(p.at("label").get<std::string>()),
                              Label(p.at("target").get<std::string>()),
                              p.contains("out_degree") ? parse_distribution(p.at("out_degree"))
                                                       : DegreeDistribution{},
                              p.value("target_skew", 0.0)});
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("schema: ") + ex.what());
  }
  validate_schema(s);
  return s;
}

GraphSchema load_schema(std::istream& in) {
  try {
    return parse_schema(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& ex) {
    throw InputError(std::string("schema: ") + ex.what());
  }
}

PropertyGraph generate_synthetic(const GraphSchema& schema, std::size_t target_size,
                                 std::uint64_t seed) {
  validate_schema(schema);
  PropertyGraph::Builder b;
  if (target_size == 0) return std::move(b).build();

  Sampler rng(seed);
  const auto counts = type_counts(schema, target_size);
  std::map<Label, std::vector<VertexId>> by_type;
  for (std::size_t i = 0; i < schema.vertex_types.size(); ++i) {
    const auto& t = schema.vertex_types[i];
    auto& ids = by_type[t.label];
    for (std::size_t k = 0; k < counts[i]; ++k) {
      PropertyMap props;
      for (const auto& p : t.properties) {
        props.emplace(p.name, static_cast<std::int64_t>(rng.uniform(0, p.max - p.min)) + p.min);
      }
      ids.push_back(b.add_vertex(t.label, std::move(props)));
    }
  }

  for (const auto& p : schema.predicates) {
    const auto& sources = by_type[p.source];
    const auto& targets = by_type[p.target];
    if (sources.empty() || targets.empty()) continue;

    // Popularity order over targets for skewed selection.
    std::vector<std::size_t> rank(targets.size());
    std::iota(rank.begin(), rank.end(), 0);
    std::vector<double> cdf;
    if (p.target_skew > 0) {
      std::shuffle(rank.begin(), rank.end(), rng.engine());
      cdf = Sampler::zipf_cdf(targets.size(), p.target_skew);
    }

    std::size_t emitted = 0;
    std::unordered_set<VertexId> chosen;
    for (VertexId s : sources) {
      const std::size_t d = std::min<std::size_t>(rng.degree(p.out_degree), targets.size());
      chosen.clear();
      std::vector<VertexId> picks;
      // Rejection keeps targets distinct per source; give up after a bounded
      // number of draws on heavily skewed distributions.
      for (std::size_t attempts = 0; picks.size() < d && attempts < 8 * d + 16; ++attempts) {
        const std::size_t idx =
            cdf.empty() ? rng.uniform(0, targets.size() - 1) : rank[rng.pick(cdf)];
        if (chosen.insert(targets[idx]).second) picks.push_back(targets[idx]);
      }
      for (VertexId t : picks) b.add_edge(s, p.label, t);
      emitted += picks.size();
    }
    if (emitted == 0) {
      b.add_edge(sources[rng.uniform(0, sources.size() - 1)], p.label,
                 targets[rng.uniform(0, targets.size() - 1)]);
    }
  }
  return std::move(b).build();
}

GraphSchema bib_schema() {
  auto zipf = [](std::uint32_t lo, std::uint32_t hi, double a) {
    return DegreeDistribution{DegreeDistribution::Kind::zipfian, lo, hi, a};
  };
  auto uni = [](std::uint32_t lo, std::uint32_t hi) {
    return DegreeDistribution{DegreeDistribution::Kind::uniform, lo, hi, 1.0};
  };
  GraphSchema s;
  s.name = "bib";
  s.vertex_types = {{Label("researcher"), 0.5, {{"age", 22, 80}}},
                    {Label("paper"), 0.3, {{"year", 1990, 2020}}},
                    {Label("journal"), 0.1, {}},
                    {Label("conference"), 0.05, {}},
                    {Label("city"), 0.05, {}}};
  s.predicates = {{Label("researcher"), Label("authors"), Label("paper"), zipf(0, 6, 1.5), 0.0},
                  {Label("paper"), Label("publishedIn"), Label("conference"), uni(0, 1), 0.0},
                  {Label("paper"), Label("extendedTo"), Label("journal"), uni(0, 1), 0.0},
                  {Label("conference"), Label("heldIn"), Label("city"), uni(1, 1), 0.0}};
  return s;
}

GraphSchema shop_schema() {
  // 24 vertex types and 82 predicates with a seeded, fixed layout.
  static const char* const types[] = {
      "User",     "Product",  "Retailer", "Offer",     "Review",  "Website",
      "City",     "Country",  "Topic",    "Genre",     "SubGenre", "Category",
      "Purchase", "Language", "AgeGroup", "Gender",    "Role",    "Artist",
      "Album",    "Movie",    "Book",     "Publisher", "Event",   "Venue"};
  GraphSchema s;
  s.name = "shop";
  for (std::size_t i = 0; i < std::size(types); ++i) {
    s.vertex_types.push_back({Label(types[i]), i < 5 ? 0.1 : 0.5 / 19.0, {}});
  }
  s.vertex_types[0].properties.push_back({"age", 12, 90});
  std::mt19937_64 rng(82);
  for (int k = 0; k < 82; ++k) {
    const auto src = std::uniform_int_distribution<std::size_t>(0, std::size(types) - 1)(rng);
    const auto dst = std::uniform_int_distribution<std::size_t>(0, std::size(types) - 1)(rng);
    const auto hi = static_cast<std::uint32_t>(std::uniform_int_distribution<int>(1, 3)(rng));
    s.predicates.push_back({Label(types[src]), Label("p" + std::to_string(k)), Label(types[dst]),
                            {DegreeDistribution::Kind::zipfian, 0, hi, 2.0},
                            0.5});
  }
  return s;
}

}  // namespace grasp
