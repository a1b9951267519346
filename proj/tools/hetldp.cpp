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
// Command-line surface for the heterogeneous-LDP estimators: privatize and
// aggregate datasets, run Monte Carlo verification experiments, audit the
// mechanisms' privacy ratios, and render reports.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hetldp/config.hpp"
#include "hetldp/dist_learn.hpp"
#include "hetldp/errors.hpp"
#include "hetldp/harness.hpp"
#include "hetldp/io.hpp"
#include "hetldp/multidim_mech.hpp"
#include "hetldp/scalar_mech.hpp"
#include "hetldp/text.hpp"

namespace hetldp {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitDataError = 3;
constexpr int kExitInternalError = 4;

using nlohmann::ordered_json;

// Common per-subcommand options and their resolution rules.
struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<unsigned> threads;
  bool no_clamp = false;
  bool simplex_project = false;
  std::optional<std::string> gamma_variant;
  std::string format = "both";  // csv | json | both
};

void add_common_flags(CLI::App* cmd, CommonOptions* opts, bool with_config = true) {
  if (with_config) {
    cmd->add_option("--config", opts->config_path, "experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
  }
  cmd->add_option("--out", opts->out_dir, "output directory")->required();
  cmd->add_option("--seed", opts->seed, "master seed (overrides config and HETLDP_SEED)");
  cmd->add_option("--trials", opts->trials, "trial count override");
  cmd->add_option("--threads", opts->threads, "worker threads (0 = hardware)");
  cmd->add_flag("--no-clamp", opts->no_clamp,
                "disable clamping/norm-capping of estimates");
  cmd->add_flag("--simplex-project", opts->simplex_project,
                "project distribution estimates onto the probability simplex");
  cmd->add_option("--gamma-variant", opts->gamma_variant,
                  "projection accuracy form: proof | algorithm")
      ->check(CLI::IsMember({"proof", "algorithm"}));
  cmd->add_option("--format", opts->format, "report format: csv | json | both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
}

ConfigDocument load_config(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const DataError& e) {
    throw ConfigError(e.what());
  }
  return parse_config(text);
}

// Seed precedence: --seed flag, then the config's master_seed, then the
// HETLDP_SEED environment variable, then 0.
std::uint64_t resolve_seed(const CommonOptions& opts, const ConfigDocument& doc) {
  if (opts.seed) return *opts.seed;
  if (doc.has_master_seed) return doc.config.master_seed;
  if (const char* env = std::getenv("HETLDP_SEED")) {
    auto parsed = parse_u64(env);
    if (!parsed) throw ConfigError("HETLDP_SEED is not a nonnegative integer");
    return *parsed;
  }
  return 0;
}

ConfigDocument resolve_options(const CommonOptions& opts) {
  ConfigDocument doc = load_config(opts.config_path);
  doc.config.master_seed = resolve_seed(opts, doc);
  doc.has_master_seed = true;
  if (opts.trials) doc.config.trials = *opts.trials;
  if (opts.threads) doc.config.threads = *opts.threads;
  if (opts.no_clamp) doc.config.clamp = false;
  if (opts.simplex_project) doc.config.simplex_project = true;
  if (opts.gamma_variant) {
    doc.config.gamma_variant = *opts.gamma_variant == "proof" ? GammaVariant::kProof
                                                              : GammaVariant::kAlgorithm;
  }
  return doc;
}

std::vector<double> laplace_audit_grid() {
  std::vector<double> grid;
  grid.reserve(2001);
  for (int k = 0; k <= 2000; ++k) grid.push_back(-10.0 + 0.01 * k);
  return grid;
}

const char* kPlotScript = R"PY(#!/usr/bin/env python3
"""Renders the quantile table produced alongside this script.

Reads quantiles.csv (columns: beta, empirical_quantile, shape,
fitted_constant, residual) and plots the empirical quantiles against the
fitted reference curve on a log-x axis.
"""
import csv
import sys

try:
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit("matplotlib is required to render the plot")

betas, quantiles, shapes, consts = [], [], [], []
with open("quantiles.csv", newline="") as fh:
    for row in csv.DictReader(fh):
        betas.append(float(row["beta"]))
        quantiles.append(float(row["empirical_quantile"]))
        shapes.append(float(row["shape"]))
        consts.append(float(row["fitted_constant"]))

fitted = [c * s for c, s in zip(consts, shapes)]
plt.figure(figsize=(5, 3.5))
plt.plot(betas, quantiles, "o-", label="empirical quantile")
plt.plot(betas, fitted, "s--", label="fitted reference shape")
plt.xscale("log")
plt.xlabel("beta")
plt.ylabel("error quantile")
plt.legend()
plt.tight_layout()
plt.savefig("quantiles.png", dpi=150)
print("wrote quantiles.png")
)PY";

int run_simulate(const CommonOptions& opts) {
  ConfigDocument doc = resolve_options(opts);
  const ExperimentConfig& cfg = doc.config;
  if (!doc.has_n || !doc.has_budgets || !doc.has_distribution) {
    throw ConfigError("simulate requires n, [budgets], and [distribution]");
  }

  PrivacyBudgets budgets = resolve_budgets(cfg.budgets, cfg.n, cfg.master_seed);
  ErrorSample sample = run_trials(cfg);

  auto shape_fn = [&](double beta) {
    switch (cfg.mechanism) {
      case Mechanism::kLaplace:
      case Mechanism::kRr:
        return scalar_bound_shape(budgets, beta);
      case Mechanism::kDuchi:
        return multidim_bound_shape(budgets, beta, cfg.d, cfg.r);
      case Mechanism::kDistLearn:
        return distlearn_bound_shape(budgets, beta, cfg.d);
    }
    return 0.0;
  };
  std::vector<BoundComparisonRow> rows = bound_comparison(sample, cfg.betas, shape_fn);

  ArtifactWriter writer(opts.out_dir);
  const bool want_csv = opts.format != "json";
  const bool want_json = opts.format != "csv";

  if (want_csv) {
    std::string errors_csv = "trial,trial_seed,error\n";
    for (std::size_t t = 0; t < sample.errors.size(); ++t) {
      errors_csv += std::to_string(t) + "," + std::to_string(sample.trial_seeds[t]) + "," +
                    format_double(sample.errors[t]) + "\n";
    }
    writer.write("errors.csv", errors_csv);

    std::string quantiles_csv = "beta,empirical_quantile,shape,fitted_constant,residual\n";
    for (const auto& row : rows) {
      quantiles_csv += format_double(row.beta) + "," +
                       format_double(row.empirical_quantile) + "," +
                       format_double(row.shape) + "," +
                       format_double(row.fitted_constant) + "," +
                       format_double(row.residual) + "\n";
    }
    writer.write("quantiles.csv", quantiles_csv);
    writer.write("plot.py", kPlotScript);
  }

  if (want_json) {
    ordered_json summary;
    summary["mechanism"] = mechanism_name(cfg.mechanism);
    summary["n"] = cfg.n;
    summary["trials"] = cfg.trials;
    summary["master_seed"] = cfg.master_seed;
    summary["clamp"] = cfg.clamp;
    summary["sum_epsilon_squared"] = budgets.sum_epsilon_squared();
    summary["any_epsilon_above_one"] = budgets.any_above_one();
    summary["rows"] = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json entry{{"beta", row.beta},
                         {"empirical_quantile", row.empirical_quantile},
                         {"shape", row.shape},
                         {"fitted_constant", row.fitted_constant},
                         {"residual", row.residual}};
      // Constant-free minimax reference curves, for visual comparison only.
      if (cfg.mechanism == Mechanism::kLaplace || cfg.mechanism == Mechanism::kRr) {
        double lower = scalar_lower_shape(budgets, row.beta);
        if (!std::isnan(lower)) entry["lower_shape"] = lower;
      } else if (cfg.mechanism == Mechanism::kDuchi) {
        entry["lower_shape"] = multidim_lower_shape(budgets, row.beta, cfg.d, cfg.r);
      }
      summary["rows"].push_back(entry);
    }
    summary["config"] = serialize_config(doc);
    writer.write("summary.json", summary.dump(2) + "\n");
  }

  writer.write_manifest(
      "simulate", cfg.master_seed,
      ordered_json{{"format", opts.format},
                   {"config_fnv1a64", to_hex(fnv1a64(serialize_config(doc)))}});
  std::cout << "simulate: " << sample.errors.size() << " trials, fitted constant "
            << format_double(rows.front().fitted_constant) << "\n";
  return kExitOk;
}

int run_audit(const std::vector<double>& epsilons, const std::string& mechanism,
              const CommonOptions& opts, double norm_fraction, std::size_t draws) {
  if (epsilons.empty()) throw ConfigError("audit requires at least one epsilon");
  for (double eps : epsilons) {
    if (!(eps > 0) || !std::isfinite(eps)) {
      throw ConfigError("audit epsilons must be positive and finite");
    }
  }
  const std::uint64_t seed = opts.seed ? *opts.seed : 0;
  const std::vector<double> grid = laplace_audit_grid();

  std::string csv =
      "mechanism,epsilon,max_log_ratio,analytic,hemisphere_mass_expected,"
      "hemisphere_mass_observed\n";
  ordered_json rows = ordered_json::array();
  auto add_row = [&](const AuditResult& audit, std::optional<double> expected,
                     std::optional<double> observed) {
    csv += std::string(mechanism_name(audit.mechanism)) + "," +
           format_double(audit.epsilon) + "," + format_double(audit.max_log_ratio) + "," +
           (audit.analytic ? "true" : "false") + ",";
    csv += expected ? format_double(*expected) : "";
    csv += ",";
    csv += observed ? format_double(*observed) : "";
    csv += "\n";
    ordered_json row{{"mechanism", mechanism_name(audit.mechanism)},
                     {"epsilon", audit.epsilon},
                     {"max_log_ratio", audit.max_log_ratio},
                     {"analytic", audit.analytic}};
    if (expected) row["hemisphere_mass_expected"] = *expected;
    if (observed) row["hemisphere_mass_observed"] = *observed;
    rows.push_back(row);
    std::cout << mechanism_name(audit.mechanism) << " eps=" << format_double(audit.epsilon)
              << " max_log_ratio=" << format_double(audit.max_log_ratio) << "\n";
  };

  for (double eps : epsilons) {
    if (mechanism == "rr" || mechanism == "all") {
      add_row(audit_rr(eps), std::nullopt, std::nullopt);
    }
    if (mechanism == "laplace" || mechanism == "all") {
      add_row(audit_laplace(eps, grid), std::nullopt, std::nullopt);
    }
    if (mechanism == "duchi" || mechanism == "all") {
      DuchiAuditResult result = audit_duchi(eps, norm_fraction, seed, draws);
      add_row(result.audit, result.expected_hemisphere_mass,
              result.observed_hemisphere_mass);
    }
  }

  ArtifactWriter writer(opts.out_dir);
  if (opts.format != "json") writer.write("audits.csv", csv);
  if (opts.format != "csv") writer.write("audits.json", rows.dump(2) + "\n");
  writer.write_manifest("audit", seed,
                        ordered_json{{"format", opts.format},
                                     {"norm_fraction", norm_fraction},
                                     {"draws", draws}});
  return kExitOk;
}

int run_privatize(const CommonOptions& opts, const std::string& data_path) {
  ConfigDocument doc = resolve_options(opts);
  const ExperimentConfig& cfg = doc.config;
  const std::uint64_t seed = cfg.master_seed;
  std::string content = read_file(data_path);

  ArtifactWriter writer(opts.out_dir);
  ordered_json extra{{"data_fnv1a64", to_hex(fnv1a64(content))}};

  switch (cfg.mechanism) {
    case Mechanism::kLaplace:
    case Mechanism::kRr: {
      ScalarDataset data = ingest_scalar_csv(content);
      PrivacyBudgets budgets(data.epsilons);
      auto reports = privatize_scalar_users(data.values, budgets, cfg.mechanism, seed);
      writer.write("reports.csv", write_scalar_reports_csv(reports));
      break;
    }
    case Mechanism::kDuchi: {
      if (cfg.d < 1) throw ConfigError("privatize with the vector mechanism requires d");
      VectorDataset data = ingest_vector_jsonl(content, cfg.d, cfg.r);
      PrivacyBudgets budgets(data.epsilons);
      auto reports = privatize_ball_users(data.points, cfg.r, budgets, seed);
      writer.write("reports.jsonl", write_duchi_reports_jsonl(reports, cfg.d, cfg.r));
      break;
    }
    case Mechanism::kDistLearn: {
      if (cfg.d < 2) throw ConfigError("privatize with distlearn requires d >= 2");
      ItemDataset data = ingest_item_csv(content, cfg.d);
      PrivacyBudgets budgets(data.epsilons);
      JlParams params = jl_params(budgets, cfg.jl_beta, cfg.d, cfg.gamma_variant);
      std::uint64_t phi_seed =
          cfg.phi_seed ? *cfg.phi_seed : RngStream(seed, kPhiSeedStream).next_u64();
      ProjectionMatrix proj(params.m, cfg.d, phi_seed);
      auto reports = privatize_item_users(data.items, budgets, proj, seed);
      writer.write("reports.jsonl",
                   write_sparse_reports_jsonl(reports, proj, params.gamma));
      break;
    }
  }
  writer.write_manifest("privatize", seed, extra);
  return kExitOk;
}

int run_estimate(const CommonOptions& opts, const std::string& reports_path) {
  std::string content = read_file(reports_path);
  ScalarEstimateOptions scalar_opts;
  scalar_opts.clamp = !opts.no_clamp;
  ArtifactWriter writer(opts.out_dir);
  ordered_json out;

  auto first_line = trim(std::string_view(content).substr(0, content.find('\n')));
  if (first_line == "value,epsilon,mechanism") {
    std::vector<ScalarReport> reports = read_scalar_reports_csv(content);
    std::vector<double> eps;
    eps.reserve(reports.size());
    for (const auto& rep : reports) eps.push_back(rep.epsilon);
    PrivacyBudgets budgets(eps);
    for (const auto& rep : reports) {
      if (rep.mechanism != reports.front().mechanism) {
        throw DataError("report file mixes mechanisms");
      }
    }
    bool laplace = reports.front().mechanism == ScalarMechanism::kLaplace;
    ScalarEstimate est = laplace ? laplace_estimate(reports, budgets, scalar_opts)
                                 : rr_estimate(reports, budgets, scalar_opts);
    out["mechanism"] = laplace ? "laplace" : "rr";
    out["n"] = reports.size();
    out["theta_hat"] = est.theta_hat;
    out["theta_raw"] = est.theta_raw;
    out["clamped"] = est.clamped;
    out["weight_scheme"] = weight_scheme_name(est.scheme);
  } else {
    nlohmann::json meta = nlohmann::json::parse(first_line, nullptr, false);
    if (meta.is_discarded() || !meta.contains("mechanism")) {
      throw DataError("unrecognized report file format");
    }
    std::string mech = meta["mechanism"].get<std::string>();
    if (mech == "duchi") {
      DuchiReportFile file = read_duchi_reports_jsonl(content);
      std::vector<double> eps;
      for (const auto& rep : file.reports) eps.push_back(rep.epsilon);
      PrivacyBudgets budgets(eps);
      VectorEstimateOptions vec_opts;
      vec_opts.norm_cap = !opts.no_clamp;
      VectorEstimate est = multidim_estimate(file.reports, budgets, vec_opts);
      out["mechanism"] = "duchi";
      out["n"] = file.reports.size();
      out["d"] = file.d;
      out["r"] = file.r;
      out["theta_hat"] = est.theta_hat;
      out["theta_raw"] = est.theta_raw;
      out["norm_capped"] = est.norm_capped;
      out["weight_scheme"] = weight_scheme_name(WeightScheme::kEpsilonSquared);
    } else if (mech == "distlearn") {
      SparseReportFile file = read_sparse_reports_jsonl(content);
      std::vector<double> eps;
      for (const auto& rep : file.reports) eps.push_back(rep.epsilon);
      PrivacyBudgets budgets(eps);
      ProjectionMatrix proj(file.m, file.d, file.phi_seed);
      std::vector<double> z_bar = aggregate_reports(file.reports, budgets, proj);
      FrequencyEstimate est = estimate_distribution(z_bar, proj, file.gamma);
      if (opts.simplex_project) est = project_to_simplex(est);
      out["mechanism"] = "distlearn";
      out["n"] = file.reports.size();
      out["d"] = file.d;
      out["m"] = file.m;
      out["gamma"] = file.gamma;
      out["simplex_projected"] = est.simplex_projected;
      out["p_hat"] = est.p_hat;
      out["weight_scheme"] = weight_scheme_name(WeightScheme::kRrInverseVariance);
    } else {
      throw DataError("unrecognized report mechanism '" + mech + "'");
    }
  }
  writer.write("estimate.json", out.dump(2) + "\n");
  writer.write_manifest("estimate", opts.seed ? *opts.seed : 0,
                        ordered_json{{"reports_fnv1a64", to_hex(fnv1a64(content))}});
  return kExitOk;
}

int run_learn_dist(const CommonOptions& opts, const std::string& data_path) {
  ConfigDocument doc = resolve_options(opts);
  const ExperimentConfig& cfg = doc.config;
  if (cfg.mechanism != Mechanism::kDistLearn) {
    throw ConfigError("learn-dist requires mechanism = distlearn");
  }
  if (cfg.d < 2) throw ConfigError("learn-dist requires d >= 2");

  std::string content = read_file(data_path);
  ItemDataset data = ingest_item_csv(content, cfg.d);
  PrivacyBudgets budgets(data.epsilons);
  JlParams params = jl_params(budgets, cfg.jl_beta, cfg.d, cfg.gamma_variant);
  std::uint64_t phi_seed = cfg.phi_seed
                               ? *cfg.phi_seed
                               : RngStream(cfg.master_seed, kPhiSeedStream).next_u64();
  ProjectionMatrix proj(params.m, cfg.d, phi_seed);
  auto reports = privatize_item_users(data.items, budgets, proj, cfg.master_seed);
  std::vector<double> z_bar = aggregate_reports(reports, budgets, proj);
  FrequencyEstimate est = estimate_distribution(z_bar, proj, params.gamma);
  if (cfg.simplex_project) est = project_to_simplex(est);

  ArtifactWriter writer(opts.out_dir);
  std::string csv = "item,p_hat\n";
  for (std::size_t v = 0; v < est.p_hat.size(); ++v) {
    csv += std::to_string(v + 1) + "," + format_double(est.p_hat[v]) + "\n";
  }
  writer.write("p_hat.csv", csv);

  ordered_json summary;
  summary["n"] = data.items.size();
  summary["d"] = cfg.d;
  summary["m"] = params.m;
  summary["gamma"] = params.gamma;
  summary["gamma_variant"] =
      cfg.gamma_variant == GammaVariant::kProof ? "proof" : "algorithm";
  summary["jl_beta"] = cfg.jl_beta;
  summary["phi_seed"] = phi_seed;
  summary["phi_seed_hash"] = to_hex(proj.seed_hash());
  summary["simplex_projected"] = est.simplex_projected;
  summary["sum_epsilon_squared"] = budgets.sum_epsilon_squared();
  double total = 0;
  for (double p : est.p_hat) total += p;
  summary["p_hat_total"] = total;
  writer.write("distlearn.json", summary.dump(2) + "\n");
  writer.write_manifest("learn-dist", cfg.master_seed,
                        ordered_json{{"data_fnv1a64", to_hex(fnv1a64(content))}});
  return kExitOk;
}

int run_report(const std::string& in_dir, const CommonOptions& opts) {
  std::string content = read_file(std::filesystem::path(in_dir) / "summary.json");
  nlohmann::json summary = nlohmann::json::parse(content, nullptr, false);
  if (summary.is_discarded() || !summary.contains("rows")) {
    throw DataError("summary.json is missing or malformed in " + in_dir);
  }
  ArtifactWriter writer(opts.out_dir);
  if (opts.format != "json") {
    std::string csv = "beta,empirical_quantile,shape,fitted_constant,residual\n";
    for (const auto& row : summary["rows"]) {
      csv += format_double(row["beta"].get<double>()) + "," +
             format_double(row["empirical_quantile"].get<double>()) + "," +
             format_double(row["shape"].get<double>()) + "," +
             format_double(row["fitted_constant"].get<double>()) + "," +
             format_double(row["residual"].get<double>()) + "\n";
    }
    writer.write("quantiles.csv", csv);
    writer.write("plot.py", kPlotScript);
  }
  if (opts.format != "csv") writer.write("summary.json", content);
  writer.write_manifest("report", summary.value("master_seed", 0ull),
                        ordered_json{{"format", opts.format}});
  return kExitOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"heterogeneous local-differential-privacy estimators and verification"};
  app.require_subcommand(1);

  CommonOptions simulate_opts;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "run Monte Carlo trials and compare error quantiles to reference shapes");
  add_common_flags(simulate, &simulate_opts);

  CommonOptions audit_opts;
  std::vector<double> audit_epsilons;
  std::string audit_mechanism = "all";
  double audit_norm_fraction = 1.0;
  std::size_t audit_draws = 100000;
  CLI::App* audit = app.add_subcommand("audit", "analytic privacy-ratio audits");
  audit->add_option("--epsilons", audit_epsilons, "comma-separated privacy parameters")
      ->required()
      ->delimiter(',');
  audit->add_option("--mechanism", audit_mechanism, "rr | laplace | duchi | all")
      ->check(CLI::IsMember({"rr", "laplace", "duchi", "all"}));
  audit->add_option("--norm-fraction", audit_norm_fraction,
                    "||x||/r used for the hemisphere-mass check")
      ->check(CLI::Range(0.0, 1.0));
  audit->add_option("--draws", audit_draws, "Monte Carlo draws for the mass check");
  add_common_flags(audit, &audit_opts, /*with_config=*/false);

  CommonOptions privatize_opts;
  std::string privatize_data;
  CLI::App* privatize = app.add_subcommand("privatize", "stream per-user reports to a file");
  privatize->add_option("--data", privatize_data, "input dataset")
      ->required()
      ->check(CLI::ExistingFile);
  add_common_flags(privatize, &privatize_opts);

  CommonOptions estimate_opts;
  std::string estimate_reports;
  CLI::App* estimate = app.add_subcommand("estimate", "aggregate a report file");
  estimate->add_option("--reports", estimate_reports, "report file from privatize")
      ->required()
      ->check(CLI::ExistingFile);
  add_common_flags(estimate, &estimate_opts, /*with_config=*/false);

  CommonOptions learn_opts;
  std::string learn_data;
  CLI::App* learn = app.add_subcommand(
      "learn-dist", "full distribution-learning pipeline over an item dataset");
  learn->add_option("--data", learn_data, "item dataset (CSV value,epsilon)")
      ->required()
      ->check(CLI::ExistingFile);
  add_common_flags(learn, &learn_opts);

  CommonOptions report_opts;
  std::string report_in;
  CLI::App* report =
      app.add_subcommand("report", "re-render summaries from a run directory");
  report->add_option("--in", report_in, "directory containing summary.json")
      ->required()
      ->check(CLI::ExistingDirectory);
  add_common_flags(report, &report_opts, /*with_config=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help text or the usage error
    return code == 0 ? kExitOk : kExitConfigError;
  }

  if (simulate->parsed()) return run_simulate(simulate_opts);
  if (audit->parsed()) {
    return run_audit(audit_epsilons, audit_mechanism, audit_opts, audit_norm_fraction,
                     audit_draws);
  }
  if (privatize->parsed()) return run_privatize(privatize_opts, privatize_data);
  if (estimate->parsed()) return run_estimate(estimate_opts, estimate_reports);
  if (learn->parsed()) return run_learn_dist(learn_opts, learn_data);
  if (report->parsed()) return run_report(report_in, report_opts);
  return kExitConfigError;
}

void emit_error(const char* type, const std::string& message) {
  ordered_json record{{"error", ordered_json{{"type", type}, {"message", message}}}};
  std::cerr << record.dump() << "\n";
}

}  // namespace
}  // namespace hetldp

int main(int argc, char** argv) {
  try {
    return hetldp::dispatch(argc, argv);
  } catch (const hetldp::ConfigError& e) {
    hetldp::emit_error("config", e.what());
    return hetldp::kExitConfigError;
  } catch (const hetldp::DataError& e) {
    hetldp::emit_error("data", e.what());
    return hetldp::kExitDataError;
  } catch (const std::exception& e) {
    hetldp::emit_error("internal", e.what());
    return hetldp::kExitInternalError;
  }
}
