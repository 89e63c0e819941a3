#include "hetnet/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hetnet {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

double require_positive_number(const json& j, const std::string& where,
                               const char* field) {
  if (!j.contains(field)) fail(where, std::string(field) + " is missing");
  const json& v = j.at(field);
  if (!v.is_number()) fail(where, std::string(field) + " must be a number");
  const double x = v.get<double>();
  if (!(x > 0.0) || !std::isfinite(x))
    fail(where, std::string(field) + " must be finite and > 0");
  return x;
}

ScalarDistribution parse_dist(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind"))
    fail(where, "expected a distribution object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "constant")
      return ScalarDistribution::constant(j.at("value").get<double>());
    if (kind == "lognormal") {
      if (j.contains("sigma_db")) {
        if (!j.value("mean_one", false))
          fail(where, "lognormal with sigma_db requires \"mean_one\":true");
        return ScalarDistribution::lognormal_db(j.at("sigma_db").get<double>());
      }
      return ScalarDistribution::lognormal(j.at("mu").get<double>(),
                                           j.at("sigma").get<double>());
    }
    if (kind == "exponential")
      return ScalarDistribution::exponential(j.at("rate").get<double>());
    if (kind == "weibull")
      return ScalarDistribution::weibull(j.at("k").get<double>(),
                                         j.at("scale").get<double>());
    if (kind == "nakagami")
      return ScalarDistribution::nakagami(j.at("m").get<double>(),
                                          j.at("omega").get<double>());
    if (kind == "rice")
      return ScalarDistribution::rice(j.at("nu").get<double>(),
                                      j.at("sigma").get<double>());
    if (kind == "discrete") {
      std::vector<std::pair<double, double>> atoms;
      for (const auto& a : j.at("atoms"))
        atoms.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
      return ScalarDistribution::discrete(std::move(atoms));
    }
  } catch (const json::exception& e) {
    fail(where, std::string("malformed ") + kind + " parameters (" + e.what() +
                    ")");
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  fail(where, "unknown distribution kind \"" + kind + "\"");
}

json dist_to_json(const ScalarDistribution& d) {
  using Kind = ScalarDistribution::Kind;
  switch (d.kind) {
    case Kind::kConstant:
      return {{"kind", "constant"}, {"value", d.p1}};
    case Kind::kLogNormal:
      if (d.from_sigma_db)
        return {{"kind", "lognormal"}, {"sigma_db", d.sigma_db},
                {"mean_one", true}};
      return {{"kind", "lognormal"}, {"mu", d.p1}, {"sigma", d.p2}};
    case Kind::kExponential:
      return {{"kind", "exponential"}, {"rate", d.p1}};
    case Kind::kWeibull:
      return {{"kind", "weibull"}, {"k", d.p1}, {"scale", d.p2}};
    case Kind::kNakagami:
      return {{"kind", "nakagami"}, {"m", d.p1}, {"omega", d.p2}};
    case Kind::kRice:
      return {{"kind", "rice"}, {"nu", d.p1}, {"sigma", d.p2}};
    case Kind::kDiscrete: {
      json atoms = json::array();
      for (const auto& [v, p] : d.atoms) atoms.push_back({v, p});
      return {{"kind", "discrete"}, {"atoms", atoms}};
    }
  }
  throw std::logic_error("dist_to_json: unreachable");
}

}  // namespace

void TierSpec::validate(const std::string& label) const {
  using Kind = ScalarDistribution::Kind;
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    fail(label, "lambda must be finite and > 0");
  if (pathloss_exponent.kind != Kind::kConstant &&
      pathloss_exponent.kind != Kind::kDiscrete)
    fail(label, "beta must be a constant or discrete distribution");
  for (const auto& [beta, prob] : pathloss_exponent.support_atoms()) {
    (void)prob;
    if (!(beta > 2.0))
      fail(label, "beta must be > 2 (got " + std::to_string(beta) + ")");
  }
  if (!independent_marks)
    fail(label,
         "independent_marks=false is not supported; the JSON schema carries "
         "no joint mark distribution");
}

void NetworkModel::validate() const {
  if (tiers.empty())
    throw std::invalid_argument("model: needs at least one tier");
  for (size_t i = 0; i < tiers.size(); ++i)
    tiers[i].validate("tier " + std::to_string(i));
}

double NetworkModel::total_density() const {
  double total = 0.0;
  for (const auto& tier : tiers) total += tier.lambda;
  return total;
}

NetworkModel parse_model(const std::string& config_text) {
  json j;
  try {
    j = json::parse(config_text);
  } catch (const json::exception& e) {
    fail("config", std::string("invalid JSON (") + e.what() + ")");
  }
  if (!j.is_object() || !j.contains("tiers") || !j.at("tiers").is_array())
    fail("config", "top level must be {\"tiers\": [...]}");

  NetworkModel model;
  size_t index = 0;
  for (const auto& tj : j.at("tiers")) {
    const std::string where = "tier " + std::to_string(index++);
    TierSpec tier;
    tier.lambda = require_positive_number(tj, where, "lambda");
    auto field = [&](const char* name) -> ScalarDistribution {
      if (!tj.contains(name)) fail(where, std::string(name) + " is missing");
      return parse_dist(tj.at(name), where + "." + name);
    };
    tier.power = field("power");
    tier.shadowing = field("shadowing");
    tier.pathloss_constant = field("A");
    tier.pathloss_exponent = field("beta");
    tier.threshold = field("threshold");
    tier.independent_marks = tj.value("independent_marks", true);
    model.tiers.push_back(std::move(tier));
  }
  model.validate();
  return model;
}

std::string serialize_model(const NetworkModel& model) {
  json tiers = json::array();
  for (const auto& tier : model.tiers) {
    tiers.push_back({{"lambda", tier.lambda},
                     {"power", dist_to_json(tier.power)},
                     {"shadowing", dist_to_json(tier.shadowing)},
                     {"A", dist_to_json(tier.pathloss_constant)},
                     {"beta", dist_to_json(tier.pathloss_exponent)},
                     {"threshold", dist_to_json(tier.threshold)},
                     {"independent_marks", tier.independent_marks}});
  }
  return json{{"tiers", tiers}}.dump(2);
}

NetworkModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("config", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace hetnet
