//
// Copyright 2026 The hetldp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef HETLDP_CONFIG_HPP_
#define HETLDP_CONFIG_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hetldp/errors.hpp"
#include "hetldp/harness.hpp"
#include "hetldp/text.hpp"

namespace hetldp {

// A parsed experiment document. Experiments are described by a flat
// key = value text format with two optional sections:
//
//   mechanism = rr             # laplace | rr | duchi | distlearn
//   n = 1000
//   trials = 10000             # default 10000
//   betas = 0.1,0.05,0.01      # default
//   master_seed = 42           # default 0
//   clamp = true               # default true
//   d = 8                      # duchi / distlearn
//   r = 1                      # duchi ball radius, default 1
//   jl_beta = 0.1              # distlearn: beta used to size the projection
//   gamma_variant = proof      # proof | algorithm
//   simplex_project = false
//   phi_seed = 7               # optional shared projection seed
//   threads = 0                # worker threads; 0 = hardware
//   epsilon = 0.5              # shorthand: homogeneous budgets
//   theta = 0.3                # shorthand: bernoulli distribution (scalar mechanisms)
//
//   [budgets]
//   kind = explicit | uniform | two_group
//   epsilons = 1,0.5           # explicit
//   low = 0.1                  # uniform
//   high = 1.0
//   epsilon_a = 0.1            # two_group
//   count_a = 900
//   epsilon_b = 1.0
//   count_b = 100
//
//   [distribution]
//   kind = point_mass | bernoulli | ball_point | categorical
//   theta = 0.3                # point_mass / bernoulli
//   coords = 0.5,0,0           # ball_point
//   probs = 0.5,0.25,0.25      # categorical, explicit
//   zipf_exponent = 1.0        # categorical, p(v) ∝ v^-s
//   uniform = true             # categorical, uniform over [d]
//
// Unknown keys are a hard error: a config that parses is fully specified.
struct ConfigDocument {
  ExperimentConfig config;
  bool has_n = false;
  bool has_budgets = false;
  bool has_distribution = false;
  bool has_master_seed = false;  // whether the document pinned a seed
};

namespace detail {

struct ConfigEntry {
  std::string section;
  std::string key;
  std::string value;
  std::size_t line;
};

inline ConfigError key_error(const ConfigEntry& e, const std::string& message) {
  return ConfigError("line " + std::to_string(e.line) + ": " + e.key + ": " + message);
}

inline double require_double(const ConfigEntry& e) {
  auto v = parse_double(trim(e.value));
  if (!v) throw key_error(e, "expected a number, got '" + e.value + "'");
  return *v;
}

inline std::uint64_t require_u64(const ConfigEntry& e) {
  auto v = parse_u64(trim(e.value));
  if (!v) throw key_error(e, "expected a nonnegative integer, got '" + e.value + "'");
  return *v;
}

inline bool require_bool(const ConfigEntry& e) {
  auto t = trim(e.value);
  if (t == "true") return true;
  if (t == "false") return false;
  throw key_error(e, "expected true or false, got '" + e.value + "'");
}

inline std::vector<double> require_double_list(const ConfigEntry& e) {
  std::vector<double> out;
  for (auto part : split(e.value, ',')) {
    auto v = parse_double(trim(part));
    if (!v) throw key_error(e, "expected a comma-separated list of numbers");
    out.push_back(*v);
  }
  if (out.empty()) throw key_error(e, "list must not be empty");
  return out;
}

}  // namespace detail

inline ConfigDocument parse_config(std::string_view text) {
  using detail::ConfigEntry;

  // Pass 1: split into (section, key, value, line) entries.
  std::vector<ConfigEntry> entries;
  std::string section;
  std::size_t line_no = 0;
  for (auto raw_line : split(text, '\n')) {
    ++line_no;
    auto line = trim(raw_line);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "budgets" && section != "distribution") {
        throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" +
                          section + "]");
      }
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    ConfigEntry e;
    e.section = section;
    e.key = std::string(trim(line.substr(0, eq)));
    e.value = std::string(trim(line.substr(eq + 1)));
    e.line = line_no;
    if (e.key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    entries.push_back(std::move(e));
  }

  ConfigDocument doc;
  ExperimentConfig& cfg = doc.config;
  bool has_mechanism = false;
  std::optional<double> shorthand_epsilon;
  std::optional<double> shorthand_theta;
  std::optional<std::string> budget_kind;
  std::optional<std::string> dist_kind;
  bool dist_uniform = false;
  std::optional<double> dist_theta;
  std::optional<double> zipf_exponent;
  std::optional<std::vector<double>> dist_probs;
  std::optional<std::vector<double>> dist_coords;
  std::optional<std::vector<double>> budget_epsilons;
  std::optional<double> budget_low, budget_high, budget_eps_a, budget_eps_b;
  std::optional<std::uint64_t> budget_count_a, budget_count_b;

  for (const auto& e : entries) {
    if (e.section.empty()) {
      if (e.key == "mechanism") {
        if (e.value == "laplace") cfg.mechanism = Mechanism::kLaplace;
        else if (e.value == "rr") cfg.mechanism = Mechanism::kRr;
        else if (e.value == "duchi") cfg.mechanism = Mechanism::kDuchi;
        else if (e.value == "distlearn") cfg.mechanism = Mechanism::kDistLearn;
        else throw detail::key_error(e, "unknown mechanism '" + e.value + "'");
        has_mechanism = true;
      } else if (e.key == "n") {
        cfg.n = detail::require_u64(e);
        if (cfg.n < 1) throw detail::key_error(e, "n must be at least 1");
        doc.has_n = true;
      } else if (e.key == "trials") {
        cfg.trials = detail::require_u64(e);
        if (cfg.trials < 1) throw detail::key_error(e, "trials must be at least 1");
      } else if (e.key == "betas") {
        cfg.betas = detail::require_double_list(e);
        for (double b : cfg.betas) {
          if (!(b > 0.0 && b < 1.0)) {
            throw detail::key_error(e, "value " + format_double(b) + " outside (0,1)");
          }
        }
      } else if (e.key == "master_seed") {
        cfg.master_seed = detail::require_u64(e);
        doc.has_master_seed = true;
      } else if (e.key == "clamp") {
        cfg.clamp = detail::require_bool(e);
      } else if (e.key == "d") {
        cfg.d = detail::require_u64(e);
        if (cfg.d < 1) throw detail::key_error(e, "d must be at least 1");
      } else if (e.key == "r") {
        cfg.r = detail::require_double(e);
        if (!(cfg.r > 0) || !std::isfinite(cfg.r)) {
          throw detail::key_error(e, "r must be positive and finite");
        }
      } else if (e.key == "jl_beta") {
        cfg.jl_beta = detail::require_double(e);
        if (!(cfg.jl_beta > 0 && cfg.jl_beta < 1)) {
          throw detail::key_error(e, "jl_beta must lie in (0,1)");
        }
      } else if (e.key == "gamma_variant") {
        if (e.value == "proof") cfg.gamma_variant = GammaVariant::kProof;
        else if (e.value == "algorithm") cfg.gamma_variant = GammaVariant::kAlgorithm;
        else throw detail::key_error(e, "expected proof or algorithm");
      } else if (e.key == "simplex_project") {
        cfg.simplex_project = detail::require_bool(e);
      } else if (e.key == "phi_seed") {
        cfg.phi_seed = detail::require_u64(e);
      } else if (e.key == "threads") {
        cfg.threads = static_cast<unsigned>(detail::require_u64(e));
      } else if (e.key == "epsilon") {
        shorthand_epsilon = detail::require_double(e);
        if (!(*shorthand_epsilon > 0) || !std::isfinite(*shorthand_epsilon)) {
          throw detail::key_error(e, "epsilon must be positive and finite");
        }
      } else if (e.key == "theta") {
        shorthand_theta = detail::require_double(e);
        if (!(std::abs(*shorthand_theta) <= 1.0)) {
          throw detail::key_error(e, "theta must lie in [-1,1]");
        }
      } else {
        throw detail::key_error(e, "unknown key");
      }
    } else if (e.section == "budgets") {
      if (e.key == "kind") budget_kind = e.value;
      else if (e.key == "epsilons") budget_epsilons = detail::require_double_list(e);
      else if (e.key == "low") budget_low = detail::require_double(e);
      else if (e.key == "high") budget_high = detail::require_double(e);
      else if (e.key == "epsilon_a") budget_eps_a = detail::require_double(e);
      else if (e.key == "epsilon_b") budget_eps_b = detail::require_double(e);
      else if (e.key == "count_a") budget_count_a = detail::require_u64(e);
      else if (e.key == "count_b") budget_count_b = detail::require_u64(e);
      else throw detail::key_error(e, "unknown key in [budgets]");
    } else {  // distribution
      if (e.key == "kind") dist_kind = e.value;
      else if (e.key == "theta") {
        dist_theta = detail::require_double(e);
        if (!(std::abs(*dist_theta) <= 1.0)) {
          throw detail::key_error(e, "theta must lie in [-1,1]");
        }
      } else if (e.key == "coords") dist_coords = detail::require_double_list(e);
      else if (e.key == "probs") dist_probs = detail::require_double_list(e);
      else if (e.key == "zipf_exponent") zipf_exponent = detail::require_double(e);
      else if (e.key == "uniform") dist_uniform = detail::require_bool(e);
      else throw detail::key_error(e, "unknown key in [distribution]");
    }
  }

  if (!has_mechanism) throw ConfigError("missing required key: mechanism");

  // Budgets: shorthand or explicit section, not both.
  if (shorthand_epsilon && budget_kind) {
    throw ConfigError("top-level epsilon conflicts with a [budgets] section");
  }
  if (shorthand_epsilon) {
    cfg.budgets.kind = BudgetSpec::Kind::kUniform;
    cfg.budgets.low = cfg.budgets.high = *shorthand_epsilon;
    doc.has_budgets = true;
  } else if (budget_kind) {
    if (*budget_kind == "explicit") {
      if (!budget_epsilons) throw ConfigError("[budgets] kind=explicit requires epsilons");
      cfg.budgets.kind = BudgetSpec::Kind::kExplicit;
      cfg.budgets.epsilons = *budget_epsilons;
      if (!doc.has_n) {
        cfg.n = cfg.budgets.epsilons.size();
        doc.has_n = true;
      }
    } else if (*budget_kind == "uniform") {
      if (!budget_low || !budget_high) {
        throw ConfigError("[budgets] kind=uniform requires low and high");
      }
      cfg.budgets.kind = BudgetSpec::Kind::kUniform;
      cfg.budgets.low = *budget_low;
      cfg.budgets.high = *budget_high;
      if (!(cfg.budgets.low > 0) || !(cfg.budgets.high >= cfg.budgets.low)) {
        throw ConfigError("[budgets] uniform range requires 0 < low <= high");
      }
    } else if (*budget_kind == "two_group") {
      if (!budget_eps_a || !budget_eps_b || !budget_count_a || !budget_count_b) {
        throw ConfigError(
            "[budgets] kind=two_group requires epsilon_a, count_a, epsilon_b, count_b");
      }
      cfg.budgets.kind = BudgetSpec::Kind::kTwoGroup;
      cfg.budgets.epsilon_a = *budget_eps_a;
      cfg.budgets.epsilon_b = *budget_eps_b;
      cfg.budgets.count_a = *budget_count_a;
      cfg.budgets.count_b = *budget_count_b;
      if (!doc.has_n) {
        cfg.n = cfg.budgets.count_a + cfg.budgets.count_b;
        doc.has_n = true;
      }
    } else {
      throw ConfigError("[budgets] unknown kind '" + *budget_kind + "'");
    }
    doc.has_budgets = true;
  }

  // Distribution: shorthand or explicit section, not both.
  if (shorthand_theta && dist_kind) {
    throw ConfigError("top-level theta conflicts with a [distribution] section");
  }
  if (shorthand_theta) {
    if (cfg.mechanism == Mechanism::kDuchi || cfg.mechanism == Mechanism::kDistLearn) {
      throw ConfigError("top-level theta only applies to the scalar mechanisms");
    }
    cfg.distribution.kind = TrueDistribution::Kind::kBernoulli;
    cfg.distribution.theta = *shorthand_theta;
    doc.has_distribution = true;
  } else if (dist_kind) {
    if (*dist_kind == "point_mass" || *dist_kind == "bernoulli") {
      if (!dist_theta) throw ConfigError("[distribution] " + *dist_kind + " requires theta");
      cfg.distribution.kind = *dist_kind == "point_mass" ? TrueDistribution::Kind::kPointMass
                                                         : TrueDistribution::Kind::kBernoulli;
      cfg.distribution.theta = *dist_theta;
    } else if (*dist_kind == "ball_point") {
      if (!dist_coords) throw ConfigError("[distribution] ball_point requires coords");
      cfg.distribution.kind = TrueDistribution::Kind::kBallPoint;
      cfg.distribution.coords = *dist_coords;
      if (cfg.d == 0) cfg.d = cfg.distribution.coords.size();
    } else if (*dist_kind == "categorical") {
      cfg.distribution.kind = TrueDistribution::Kind::kCategorical;
      int sources = (dist_probs ? 1 : 0) + (zipf_exponent ? 1 : 0) + (dist_uniform ? 1 : 0);
      if (sources != 1) {
        throw ConfigError(
            "[distribution] categorical requires exactly one of probs, zipf_exponent, "
            "uniform");
      }
      if (dist_probs) {
        double total = 0;
        for (double p : *dist_probs) {
          if (!(p >= 0)) throw ConfigError("[distribution] probs must be nonnegative");
          total += p;
        }
        if (std::abs(total - 1.0) > 1e-6) {
          throw ConfigError("[distribution] probs must sum to 1 (got " +
                            format_double(total) + ")");
        }
        cfg.distribution.probs = *dist_probs;
        for (double& p : cfg.distribution.probs) p /= total;
        if (cfg.d == 0) cfg.d = cfg.distribution.probs.size();
      } else {
        if (cfg.d < 2) {
          throw ConfigError("[distribution] categorical generators require d >= 2");
        }
        cfg.distribution.probs.resize(cfg.d);
        if (dist_uniform) {
          for (auto& p : cfg.distribution.probs) p = 1.0 / static_cast<double>(cfg.d);
        } else {
          double s = *zipf_exponent;
          double total = 0;
          for (std::size_t v = 0; v < cfg.d; ++v) {
            cfg.distribution.probs[v] = std::pow(static_cast<double>(v + 1), -s);
            total += cfg.distribution.probs[v];
          }
          for (auto& p : cfg.distribution.probs) p /= total;
        }
      }
    } else {
      throw ConfigError("[distribution] unknown kind '" + *dist_kind + "'");
    }
    doc.has_distribution = true;
  }

  return doc;
}

// Canonical rendering: parse(serialize(parse(text))) == parse(text).
inline std::string serialize_config(const ConfigDocument& doc) {
  const ExperimentConfig& cfg = doc.config;
  std::string out;
  auto emit = [&out](std::string_view key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += "\n";
  };
  auto join = [](const std::vector<double>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ",";
      s += format_double(values[i]);
    }
    return s;
  };

  emit("mechanism", mechanism_name(cfg.mechanism));
  if (doc.has_n) emit("n", std::to_string(cfg.n));
  emit("trials", std::to_string(cfg.trials));
  emit("betas", join(cfg.betas));
  emit("master_seed", std::to_string(cfg.master_seed));
  emit("clamp", cfg.clamp ? "true" : "false");
  if (cfg.d > 0) emit("d", std::to_string(cfg.d));
  if (cfg.mechanism == Mechanism::kDuchi) emit("r", format_double(cfg.r));
  if (cfg.mechanism == Mechanism::kDistLearn) {
    emit("jl_beta", format_double(cfg.jl_beta));
    emit("gamma_variant",
         cfg.gamma_variant == GammaVariant::kProof ? "proof" : "algorithm");
    emit("simplex_project", cfg.simplex_project ? "true" : "false");
  }
  if (cfg.phi_seed) emit("phi_seed", std::to_string(*cfg.phi_seed));
  if (cfg.threads > 0) emit("threads", std::to_string(cfg.threads));

  if (doc.has_budgets) {
    out += "\n[budgets]\n";
    switch (cfg.budgets.kind) {
      case BudgetSpec::Kind::kExplicit:
        emit("kind", "explicit");
        emit("epsilons", join(cfg.budgets.epsilons));
        break;
      case BudgetSpec::Kind::kUniform:
        emit("kind", "uniform");
        emit("low", format_double(cfg.budgets.low));
        emit("high", format_double(cfg.budgets.high));
        break;
      case BudgetSpec::Kind::kTwoGroup:
        emit("kind", "two_group");
        emit("epsilon_a", format_double(cfg.budgets.epsilon_a));
        emit("count_a", std::to_string(cfg.budgets.count_a));
        emit("epsilon_b", format_double(cfg.budgets.epsilon_b));
        emit("count_b", std::to_string(cfg.budgets.count_b));
        break;
    }
  }
  if (doc.has_distribution) {
    out += "\n[distribution]\n";
    switch (cfg.distribution.kind) {
      case TrueDistribution::Kind::kPointMass:
        emit("kind", "point_mass");
        emit("theta", format_double(cfg.distribution.theta));
        break;
      case TrueDistribution::Kind::kBernoulli:
        emit("kind", "bernoulli");
        emit("theta", format_double(cfg.distribution.theta));
        break;
      case TrueDistribution::Kind::kBallPoint:
        emit("kind", "ball_point");
        emit("coords", join(cfg.distribution.coords));
        break;
      case TrueDistribution::Kind::kCategorical:
        emit("kind", "categorical");
        emit("probs", join(cfg.distribution.probs));
        break;
    }
  }
  return out;
}

}  // namespace hetldp

#endif  // HETLDP_CONFIG_HPP_
