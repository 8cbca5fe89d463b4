// Copyright 2026 The qcfb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcfb/experiment.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace qcfb {

namespace {

using Json = nlohmann::json;

[[noreturn]] void config_error(const std::string& what) {
  throw ConfigurationError("config: " + what);
}

double as_double(const Json& j, const std::string& key) {
  if (!j.is_number()) config_error(key + " must be a number");
  return j.get<double>();
}

std::int64_t as_int(const Json& j, const std::string& key) {
  if (!j.is_number_integer()) config_error(key + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_seed(const Json& j, const std::string& key) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    config_error(key + " must be a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::string as_string(const Json& j, const std::string& key) {
  if (!j.is_string()) config_error(key + " must be a string");
  return j.get<std::string>();
}

PenaltyMode parse_penalty_mode(const std::string& s) {
  if (s == "scheduled") return PenaltyMode::Scheduled;
  if (s == "fixed") return PenaltyMode::Fixed;
  config_error("penalty_mode must be 'scheduled' or 'fixed'");
}

RangeMode parse_range_mode(const std::string& s) {
  if (s == "adaptive") return RangeMode::Adaptive;
  if (s == "fixed") return RangeMode::Fixed;
  config_error("range_mode must be 'adaptive' or 'fixed'");
}

RangeSpace parse_range_space(const std::string& s) {
  if (s == "scaled") return RangeSpace::Scaled;
  if (s == "unscaled") return RangeSpace::Unscaled;
  config_error("range_space must be 'scaled' or 'unscaled'");
}

using FieldSetter = std::function<void(DEConfig&, const Json&, const std::string&)>;

const std::map<std::string, FieldSetter>& de_fields() {
  static const std::map<std::string, FieldSetter> fields = {
      {"n_pop", [](DEConfig& c, const Json& j, const std::string& k) { c.n_pop = static_cast<int>(as_int(j, k)); }},
      {"f_scale", [](DEConfig& c, const Json& j, const std::string& k) { c.f_scale = as_double(j, k); }},
      {"cr", [](DEConfig& c, const Json& j, const std::string& k) { c.cr = as_double(j, k); }},
      {"delta", [](DEConfig& c, const Json& j, const std::string& k) { c.delta = as_double(j, k); }},
      {"phi", [](DEConfig& c, const Json& j, const std::string& k) { c.phi = as_double(j, k); }},
      {"rounds", [](DEConfig& c, const Json& j, const std::string& k) { c.rounds = static_cast<int>(as_int(j, k)); }},
      {"rho_max", [](DEConfig& c, const Json& j, const std::string& k) { c.rho_max = as_double(j, k); }},
      {"alpha", [](DEConfig& c, const Json& j, const std::string& k) { c.alpha = as_double(j, k); }},
      {"zeta", [](DEConfig& c, const Json& j, const std::string& k) { c.zeta = as_double(j, k); }},
      {"bet_runs", [](DEConfig& c, const Json& j, const std::string& k) { c.bet_runs = static_cast<int>(as_int(j, k)); }},
      {"bet_iters", [](DEConfig& c, const Json& j, const std::string& k) { c.bet_iters = static_cast<int>(as_int(j, k)); }},
      {"init_bound", [](DEConfig& c, const Json& j, const std::string& k) { c.init_bound = as_double(j, k); }},
      {"max_gen", [](DEConfig& c, const Json& j, const std::string& k) { c.max_gen = as_int(j, k); }},
      {"stagnation_cap", [](DEConfig& c, const Json& j, const std::string& k) { c.stagnation_cap = as_int(j, k); }},
      {"conv_threshold", [](DEConfig& c, const Json& j, const std::string& k) { c.conv_threshold = as_double(j, k); }},
      {"penalty_mode", [](DEConfig& c, const Json& j, const std::string& k) { c.penalty_mode = parse_penalty_mode(as_string(j, k)); }},
      {"fixed_rho", [](DEConfig& c, const Json& j, const std::string& k) { c.fixed_rho = as_double(j, k); }},
      {"range_mode", [](DEConfig& c, const Json& j, const std::string& k) { c.range_mode = parse_range_mode(as_string(j, k)); }},
      {"fixed_half_width", [](DEConfig& c, const Json& j, const std::string& k) { c.fixed_half_width = as_double(j, k); }},
      {"seed", [](DEConfig& c, const Json& j, const std::string& k) { c.seed = as_seed(j, k); }},
      {"trace_stride", [](DEConfig& c, const Json& j, const std::string& k) { c.trace_stride = as_int(j, k); }},
  };
  return fields;
}

}  // namespace

const char* to_string(RangeSpace space) {
  return space == RangeSpace::Scaled ? "scaled" : "unscaled";
}

BudgetPreset budget_preset(const std::string& name) {
  if (name == "full") return BudgetPreset{"full", std::nullopt, 300000, 60000, 10, 10};
  if (name == "desk") return BudgetPreset{"desk", 10, 20000, 5000, 10, 10};
  if (name == "smoke") return BudgetPreset{"smoke", 3, 300, 100, 2, 5};
  config_error("unknown budget preset '" + name + "' (expected full, desk or smoke)");
}

void apply_budget(const BudgetPreset& preset, DEConfig& cfg) {
  if (preset.rounds) cfg.rounds = *preset.rounds;
  cfg.max_gen = preset.max_gen;
  cfg.stagnation_cap = preset.stagnation_cap;
  if (preset.bet_runs) cfg.bet_runs = *preset.bet_runs;
  if (preset.bet_iters) cfg.bet_iters = *preset.bet_iters;
}

std::string AblationVariant::label() const {
  std::ostringstream os;
  os << (strict_feasibility ? "SFR" : "RFR") << '/';
  if (penalty == PenaltyMode::Scheduled) {
    os << "SDP";
  } else {
    os << "FP(" << fixed_rho << ')';
  }
  os << "/alpha=" << alpha << '/';
  if (range == RangeMode::Adaptive) {
    os << "adaptive";
  } else {
    os << "fixed(" << range_half_width << ')';
  }
  return os.str();
}

AblationVariant ablation_variant(int row) {
  AblationVariant v;
  v.row = row;
  switch (row) {
    case 0:
      break;
    case 1:
      v.strict_feasibility = true;
      break;
    case 2:
    case 3:
    case 4:
    case 5: {
      static constexpr double kFixed[] = {0.0, 100.0, 1e5, 1e10};
      v.penalty = PenaltyMode::Fixed;
      v.fixed_rho = kFixed[row - 2];
      break;
    }
    case 6:
      v.alpha = 1.0;
      break;
    case 7:
      v.range = RangeMode::Fixed;
      v.range_half_width = 10.0;
      break;
    case 8:
    case 9:
    case 10: {
      static constexpr double kWidth[] = {10.0, 100.0, 1000.0};
      v.alpha = 1.0;
      v.range = RangeMode::Fixed;
      v.range_half_width = kWidth[row - 8];
      break;
    }
    default:
      config_error("ablation row must lie in 0..10, got " + std::to_string(row));
  }
  return v;
}

void apply_ablation(const AblationVariant& v, RangeSpace space, DEConfig& cfg) {
  if (v.strict_feasibility) cfg.delta = kStrictDelta;
  cfg.penalty_mode = v.penalty;
  cfg.fixed_rho = v.fixed_rho;
  cfg.alpha = v.alpha;
  cfg.range_mode = v.range;
  if (v.range == RangeMode::Fixed) {
    cfg.fixed_half_width =
        space == RangeSpace::Scaled ? v.range_half_width : v.range_half_width / v.alpha;
  }
}

nlohmann::json de_config_to_json(const DEConfig& c) {
  return Json{{"n_pop", c.n_pop},
              {"f_scale", c.f_scale},
              {"cr", c.cr},
              {"delta", c.delta},
              {"phi", c.phi},
              {"rounds", c.rounds},
              {"rho_max", c.rho_max},
              {"alpha", c.alpha},
              {"zeta", c.zeta},
              {"bet_runs", c.bet_runs},
              {"bet_iters", c.bet_iters},
              {"init_bound", c.init_bound},
              {"max_gen", c.max_gen},
              {"stagnation_cap", c.stagnation_cap},
              {"conv_threshold", c.conv_threshold},
              {"penalty_mode", to_string(c.penalty_mode)},
              {"fixed_rho", c.fixed_rho},
              {"range_mode", to_string(c.range_mode)},
              {"fixed_half_width", c.fixed_half_width},
              {"seed", c.seed},
      {"trace_stride", c.trace_stride}};
}

ExperimentConfig parse_experiment_config(const nlohmann::json& doc) {
  if (!doc.is_object()) config_error("top level must be an object");
  static const std::set<std::string> kTopLevel = {"scenario", "seeds",        "output_dir", "budget",
                                                  "ablation_row", "range_space", "de"};
  for (const auto& [key, _] : doc.items()) {
    if (!kTopLevel.contains(key)) config_error("unknown key '" + key + "'");
  }
  if (!doc.contains("scenario")) config_error("missing 'scenario'");

  ExperimentConfig cfg;
  cfg.scenario = parse_scenario_id(as_string(doc.at("scenario"), "scenario"));
  if (doc.contains("range_space")) {
    cfg.range_space = parse_range_space(as_string(doc.at("range_space"), "range_space"));
  }
  if (doc.contains("output_dir")) cfg.output_dir = as_string(doc.at("output_dir"), "output_dir");
  if (doc.contains("seeds")) {
    const auto& seeds = doc.at("seeds");
    if (!seeds.is_array()) config_error("seeds must be an array");
    for (const auto& s : seeds) cfg.seeds.push_back(as_seed(s, "seeds[]"));
  }

  const ScenarioSpec spec = make_scenario(cfg.scenario);
  cfg.de.alpha = spec.defaults.alpha;
  cfg.de.rounds = spec.defaults.rounds;

  if (doc.contains("budget")) {
    cfg.budget = as_string(doc.at("budget"), "budget");
    apply_budget(budget_preset(*cfg.budget), cfg.de);
  }
  if (doc.contains("ablation_row")) {
    cfg.ablation_row = static_cast<int>(as_int(doc.at("ablation_row"), "ablation_row"));
    apply_ablation(ablation_variant(*cfg.ablation_row), cfg.range_space, cfg.de);
  }
  if (!cfg.seeds.empty()) cfg.de.seed = cfg.seeds.front();
  if (doc.contains("de")) {
    const auto& de = doc.at("de");
    if (!de.is_object()) config_error("'de' must be an object");
    for (const auto& [key, value] : de.items()) {
      const auto it = de_fields().find(key);
      if (it == de_fields().end()) config_error("unknown key 'de." + key + "'");
      it->second(cfg.de, value, "de." + key);
    }
  }
  cfg.de.validate();
  return cfg;
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
  Json doc{{"scenario", to_string(cfg.scenario)},
           {"seeds", cfg.seeds},
           {"output_dir", cfg.output_dir},
           {"range_space", to_string(cfg.range_space)},
           {"de", de_config_to_json(cfg.de)}};
  if (cfg.budget) doc["budget"] = *cfg.budget;
  if (cfg.ablation_row) doc["ablation_row"] = *cfg.ablation_row;
  return doc;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigurationError("config " + path + " is not valid JSON: " + e.what());
  }
  return parse_experiment_config(doc);
}

}  // namespace qcfb
