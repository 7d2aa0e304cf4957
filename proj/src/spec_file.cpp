#include "kothedim/spec_file.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kothedim/util.hpp"

namespace kothedim {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw SpecValidationError(path.empty() ? it.key() : path + "." + it.key(),
                                "unknown field");
}

double parse_radius(const json& value) {
  if (value.is_string()) {
    if (value.get<std::string>() == "inf") return kInf;
    throw SpecValidationError("R", "expected a number or \"inf\"");
  }
  if (!value.is_number()) throw SpecValidationError("R", "expected a number or \"inf\"");
  double r = value.get<double>();
  if (!(r >= 1.0))
    throw SpecValidationError(
        "R", "R >= 1 required: below 1 the squared radii leave the grid, so the family is "
             "not closed under pointwise products and lambda(P) is not an algebra");
  return r;
}

AlphaRule parse_alpha(const json& value, std::int64_t truncation) {
  if (value.is_string()) {
    std::string s = value.get<std::string>();
    if (s == "log_n") return AlphaRule::log_n();
    if (s == "linear") return AlphaRule::linear();
    if (s == "sqrt_log_n") return AlphaRule::sqrt_log_n();
    throw SpecValidationError("alpha",
                              "expected \"log_n\", \"linear\", \"sqrt_log_n\" or an array");
  }
  if (!value.is_array()) throw SpecValidationError("alpha", "expected a name or an array");
  std::vector<double> table;
  double prev = 0.0;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto& entry = value[i];
    if (!entry.is_number())
      throw SpecValidationError("alpha[" + std::to_string(i) + "]", "expected a number");
    double v = entry.get<double>();
    if (!(v >= 0.0) || !std::isfinite(v))
      throw SpecValidationError("alpha[" + std::to_string(i) + "]",
                                "entries must be finite and >= 0");
    if (v < prev)
      throw SpecValidationError("alpha[" + std::to_string(i) + "]",
                                "exponent sequence must be nondecreasing");
    prev = v;
    table.push_back(v);
  }
  if (static_cast<std::int64_t>(table.size()) < truncation)
    throw SpecValidationError("alpha", "table shorter than the truncation (" +
                                           std::to_string(table.size()) + " < " +
                                           std::to_string(truncation) + ")");
  return AlphaRule::explicit_list(std::move(table));
}

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecValidationError("", std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw SpecValidationError("", "spec must be a JSON object");

  reject_unknown_fields(doc, {"family", "R", "alpha", "weights", "truncation", "options"}, "");

  if (!doc.contains("family") || !doc["family"].is_string())
    throw SpecValidationError("family", "required string field");
  std::string family = doc["family"].get<std::string>();

  RunOptions options;
  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) throw SpecValidationError("options", "expected an object");
    reject_unknown_fields(o, {"strict", "search_depth", "source_probes"}, "options");
    if (o.contains("strict")) {
      if (!o["strict"].is_boolean())
        throw SpecValidationError("options.strict", "expected a boolean");
      options.strict = o["strict"].get<bool>();
    }
    if (o.contains("search_depth")) {
      if (!o["search_depth"].is_number_integer() || o["search_depth"].get<std::int64_t>() < 1)
        throw SpecValidationError("options.search_depth", "expected an integer >= 1");
      options.conditions.dom.search_depth = o["search_depth"].get<std::int64_t>();
    }
    if (o.contains("source_probes")) {
      if (!o["source_probes"].is_number_integer() ||
          o["source_probes"].get<std::int64_t>() < 1)
        throw SpecValidationError("options.source_probes", "expected an integer >= 1");
      options.conditions.dom.source_probes = o["source_probes"].get<std::int64_t>();
    }
  }

  IndexKind kind = family == "matrix_example" ? IndexKind::NaturalPairs : IndexKind::Naturals;
  std::int64_t truncation = IndexSet::default_truncation(kind);
  if (doc.contains("truncation")) {
    if (!doc["truncation"].is_number_integer() || doc["truncation"].get<std::int64_t>() < 1)
      throw SpecValidationError("truncation", "expected an integer >= 1");
    truncation = doc["truncation"].get<std::int64_t>();
  }

  auto require_absent = [&](const char* field, const char* why) {
    if (doc.contains(field))
      throw SpecValidationError(field, std::string("not valid for this family (") + why + ")");
  };

  if (family == "l1") {
    require_absent("R", "l1 has the single weight 1");
    require_absent("alpha", "l1 has the single weight 1");
    require_absent("weights", "l1 has the single weight 1");
    KotheSet set = KotheSet::single_weight(Weight::constant(1.0),
                                           IndexSet(IndexKind::Naturals, truncation))
                       .with_label("l1");
    return ParsedSpec{std::move(set), options};
  }
  if (family == "product") {
    require_absent("R", "the product family has indicator weights");
    require_absent("alpha", "the product family has indicator weights");
    require_absent("weights", "the product family has indicator weights");
    KotheSet set = KotheSet::finite_support_family(IndexSet(IndexKind::Naturals, truncation))
                       .with_label("product");
    return ParsedSpec{std::move(set), options};
  }
  if (family == "matrix_example") {
    require_absent("R", "the matrix example is parameter-free");
    require_absent("alpha", "the matrix example is parameter-free");
    require_absent("weights", "the matrix example is parameter-free");
    KotheSet set = KotheSet::matrix_example(IndexSet(IndexKind::NaturalPairs, truncation))
                       .with_label("matrix_example");
    return ParsedSpec{std::move(set), options};
  }
  if (family == "power_series") {
    require_absent("weights", "power-series weights come from R and alpha");
    if (!doc.contains("R")) throw SpecValidationError("R", "required for power_series");
    if (!doc.contains("alpha")) throw SpecValidationError("alpha", "required for power_series");
    double radius = parse_radius(doc["R"]);
    AlphaRule alpha = parse_alpha(doc["alpha"], truncation);
    KotheSet set =
        KotheSet::power_series(radius, std::move(alpha), IndexSet(IndexKind::Naturals, truncation))
            .with_label("");
    return ParsedSpec{std::move(set), options};
  }
  if (family == "explicit") {
    require_absent("R", "explicit families list their weights");
    require_absent("alpha", "explicit families list their weights");
    if (!doc.contains("weights") || !doc["weights"].is_array() || doc["weights"].empty())
      throw SpecValidationError("weights", "required non-empty array of weight tables");
    const json& tables = doc["weights"];
    std::size_t length = 0;
    std::vector<Weight> weights;
    for (std::size_t w = 0; w < tables.size(); ++w) {
      const json& table = tables[w];
      std::string path = "weights[" + std::to_string(w) + "]";
      if (!table.is_array() || table.empty())
        throw SpecValidationError(path, "expected a non-empty array of values");
      if (w == 0)
        length = table.size();
      else if (table.size() != length)
        throw SpecValidationError(path, "all weight tables must have the same length");
      std::vector<std::pair<std::int64_t, double>> values;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (!table[i].is_number())
          throw SpecValidationError(path + "[" + std::to_string(i) + "]", "expected a number");
        double v = table[i].get<double>();
        if (!(v >= 0.0) || !std::isfinite(v))
          throw SpecValidationError(path + "[" + std::to_string(i) + "]",
                                    "weight values must be finite and >= 0");
        values.emplace_back(static_cast<std::int64_t>(i + 1), v);
      }
      weights.push_back(Weight::finite_support(std::move(values)));
    }
    if (!doc.contains("truncation"))
      truncation = static_cast<std::int64_t>(length);
    else if (truncation > static_cast<std::int64_t>(length))
      throw SpecValidationError("truncation", "exceeds the weight table length");
    try {
      KotheSet set = KotheSet::explicit_family(std::move(weights),
                                               IndexSet(IndexKind::Naturals, truncation))
                         .with_label("explicit");
      return ParsedSpec{std::move(set), options};
    } catch (const std::invalid_argument& e) {
      throw SpecValidationError("weights", e.what());
    }
  }
  throw SpecValidationError(
      "family", "expected one of l1, product, power_series, matrix_example, explicit");
}

ParsedSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecValidationError("", "cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

}  // namespace kothedim
