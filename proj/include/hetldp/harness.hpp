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

#ifndef HETLDP_HARNESS_HPP_
#define HETLDP_HARNESS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hetldp/budgets.hpp"
#include "hetldp/dist_learn.hpp"
#include "hetldp/errors.hpp"
#include "hetldp/multidim_mech.hpp"
#include "hetldp/numeric.hpp"
#include "hetldp/random.hpp"
#include "hetldp/scalar_mech.hpp"

namespace hetldp {

enum class Mechanism { kLaplace, kRr, kDuchi, kDistLearn };

inline const char* mechanism_name(Mechanism m) {
  switch (m) {
    case Mechanism::kLaplace: return "laplace";
    case Mechanism::kRr: return "rr";
    case Mechanism::kDuchi: return "duchi";
    case Mechanism::kDistLearn: return "distlearn";
  }
  return "unknown";
}

// Reserved stream ids (see RngStream). User privatization occupies
// [0, 2^63 - 2); everything the harness derives lives at or above 2^63 - 2.
inline constexpr std::uint64_t kTrialStreamBase = 1ULL << 63;
inline constexpr std::uint64_t kDataStream = 1ULL << 63;
inline constexpr std::uint64_t kBudgetStream = (1ULL << 63) - 1;
inline constexpr std::uint64_t kPhiSeedStream = (1ULL << 63) - 2;

// How the per-user ε's are produced.
struct BudgetSpec {
  enum class Kind { kExplicit, kUniform, kTwoGroup };
  Kind kind = Kind::kExplicit;
  std::vector<double> epsilons;  // kExplicit
  double low = 0.0;              // kUniform: ε_i ~ Unif[low, high]
  double high = 0.0;
  double epsilon_a = 0.0;  // kTwoGroup: count_a users at ε_a, then count_b at ε_b
  double epsilon_b = 0.0;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
};

// Resolves a budget spec to concrete ε_1..ε_n. Generated budgets draw from
// the dedicated budget stream of the master seed, so a config replays to the
// same population.
inline PrivacyBudgets resolve_budgets(const BudgetSpec& spec, std::size_t n,
                                      std::uint64_t master_seed) {
  switch (spec.kind) {
    case BudgetSpec::Kind::kExplicit: {
      if (spec.epsilons.size() != n) {
        throw ConfigError("explicit budgets list " + std::to_string(spec.epsilons.size()) +
                          " entries but n = " + std::to_string(n));
      }
      return PrivacyBudgets(spec.epsilons);
    }
    case BudgetSpec::Kind::kUniform: {
      if (!(spec.low > 0) || !(spec.high >= spec.low)) {
        throw ConfigError("uniform budget range requires 0 < low <= high");
      }
      RngStream rng(master_seed, kBudgetStream);
      std::vector<double> eps(n);
      for (std::size_t i = 0; i < n; ++i) {
        eps[i] = spec.low + (spec.high - spec.low) * rng.next_unit();
      }
      return PrivacyBudgets(std::move(eps));
    }
    case BudgetSpec::Kind::kTwoGroup: {
      if (spec.count_a + spec.count_b != n) {
        throw ConfigError("two-group counts must sum to n");
      }
      std::vector<double> eps;
      eps.reserve(n);
      eps.insert(eps.end(), spec.count_a, spec.epsilon_a);
      eps.insert(eps.end(), spec.count_b, spec.epsilon_b);
      return PrivacyBudgets(std::move(eps));
    }
  }
  throw ConfigError("unknown budget spec kind");
}

// The data-generating distribution a trial samples user inputs from.
struct TrueDistribution {
  enum class Kind { kPointMass, kBernoulli, kBallPoint, kCategorical };
  Kind kind = Kind::kPointMass;
  double theta = 0.0;          // kPointMass / kBernoulli mean, in [-1,1]
  std::vector<double> coords;  // kBallPoint: the fixed point, ||coords|| <= r
  std::vector<double> probs;   // kCategorical: p over [d]
};

struct ExperimentConfig {
  Mechanism mechanism = Mechanism::kRr;
  std::size_t n = 0;
  std::size_t trials = 10000;
  std::vector<double> betas = {0.1, 0.05, 0.01};
  std::uint64_t master_seed = 0;
  bool clamp = true;  // scalar clamp to [-1,1] / vector norm cap to the ball
  BudgetSpec budgets;
  TrueDistribution distribution;
  // Multi-dimensional / distribution-learning geometry.
  std::size_t d = 0;
  double r = 1.0;
  // Distribution learning.
  double jl_beta = 0.1;  // β used to size the projection
  GammaVariant gamma_variant = GammaVariant::kProof;
  bool simplex_project = false;
  std::optional<std::uint64_t> phi_seed;  // shared projection seed (single-shot runs)
  // 0 = one worker thread per hardware thread. Thread count never changes
  // results, only wall time.
  unsigned threads = 0;
};

// Per-trial errors: squared L2 error for mean estimation, L-infinity error
// for distribution learning.
struct ErrorSample {
  std::vector<double> errors;
  std::vector<std::uint64_t> trial_seeds;
};

// --- single-shot privatization helpers -------------------------------------
//
// User i always draws from stream (seed, i). The CLI privatize path and the
// in-trial path share these helpers, which is what makes file-mediated and
// in-memory pipelines bit-identical.

inline std::vector<ScalarReport> privatize_scalar_users(std::span<const double> values,
                                                        const PrivacyBudgets& budgets,
                                                        Mechanism mechanism,
                                                        std::uint64_t seed) {
  if (values.size() != budgets.size()) {
    throw std::invalid_argument("value count does not match budget count");
  }
  std::vector<ScalarReport> reports;
  reports.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    RngStream rng(seed, i);
    if (mechanism == Mechanism::kLaplace) {
      reports.push_back(laplace_privatize(values[i], budgets.epsilons()[i], rng));
    } else if (mechanism == Mechanism::kRr) {
      reports.push_back(rr_privatize(values[i], budgets.epsilons()[i], rng));
    } else {
      throw std::invalid_argument("scalar privatization requires a scalar mechanism");
    }
  }
  return reports;
}

inline std::vector<DuchiReport> privatize_ball_users(
    std::span<const std::vector<double>> points, double ball_radius,
    const PrivacyBudgets& budgets, std::uint64_t seed) {
  if (points.size() != budgets.size()) {
    throw std::invalid_argument("point count does not match budget count");
  }
  std::vector<DuchiReport> reports;
  reports.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    RngStream rng(seed, i);
    reports.push_back(
        duchi_privatize(BallPoint{points[i], ball_radius}, budgets.epsilons()[i], rng));
  }
  return reports;
}

inline std::vector<SparseReport> privatize_item_users(
    std::span<const std::optional<std::size_t>> items, const PrivacyBudgets& budgets,
    const ProjectionMatrix& proj, std::uint64_t seed) {
  if (items.size() != budgets.size()) {
    throw std::invalid_argument("item count does not match budget count");
  }
  std::vector<SparseReport> reports;
  reports.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    RngStream rng(seed, i);
    reports.push_back(local_randomize_item(items[i], budgets.epsilons()[i], proj, rng));
  }
  return reports;
}

// --- trial runner -----------------------------------------------------------

namespace detail {

inline void validate_pairing(const ExperimentConfig& config) {
  using Kind = TrueDistribution::Kind;
  const Kind kind = config.distribution.kind;
  switch (config.mechanism) {
    case Mechanism::kLaplace:
      if (kind != Kind::kPointMass && kind != Kind::kBernoulli) {
        throw ConfigError("laplace mechanism requires a point-mass or bernoulli distribution");
      }
      if (!(std::abs(config.distribution.theta) <= 1.0)) {
        throw ConfigError("scalar mean theta must lie in [-1,1]");
      }
      break;
    case Mechanism::kRr:
      if (kind != Kind::kBernoulli) {
        throw ConfigError("randomized response requires a bernoulli distribution over ±1");
      }
      if (!(std::abs(config.distribution.theta) <= 1.0)) {
        throw ConfigError("scalar mean theta must lie in [-1,1]");
      }
      break;
    case Mechanism::kDuchi: {
      if (kind != Kind::kBallPoint) {
        throw ConfigError("the vector mechanism requires a ball-point distribution");
      }
      if (config.d < 1) throw ConfigError("vector mechanism requires d >= 1");
      if (config.distribution.coords.size() != config.d) {
        throw ConfigError("ball point has dimension " +
                          std::to_string(config.distribution.coords.size()) +
                          " but d = " + std::to_string(config.d));
      }
      if (!(l2_norm(config.distribution.coords) <= config.r * (1.0 + 1e-9))) {
        throw ConfigError("ball point lies outside the radius-r ball");
      }
      break;
    }
    case Mechanism::kDistLearn: {
      if (kind != Kind::kCategorical) {
        throw ConfigError("distribution learning requires a categorical distribution");
      }
      if (config.d < 2) throw ConfigError("distribution learning requires d >= 2");
      if (config.distribution.probs.size() != config.d) {
        throw ConfigError("categorical distribution has " +
                          std::to_string(config.distribution.probs.size()) +
                          " entries but d = " + std::to_string(config.d));
      }
      break;
    }
  }
}

inline std::size_t sample_categorical(std::span<const double> cumulative, RngStream& rng) {
  double u = rng.next_unit();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
  return std::min(idx, cumulative.size() - 1);
}

}  // namespace detail

// Runs config.trials independent end-to-end trials: sample user data from the
// configured distribution, privatize, aggregate, and record the error against
// the known true parameter. Deterministic in (config, master_seed); trials
// may execute on several threads but results are stored by trial index, so
// the output is identical regardless of worker count.
inline ErrorSample run_trials(const ExperimentConfig& config) {
  detail::validate_pairing(config);
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  if (config.n < 1) throw ConfigError("n must be at least 1");

  const PrivacyBudgets budgets =
      resolve_budgets(config.budgets, config.n, config.master_seed);

  // Cumulative distribution for categorical sampling.
  std::vector<double> cumulative;
  if (config.distribution.kind == TrueDistribution::Kind::kCategorical) {
    cumulative.resize(config.d);
    double run = 0;
    for (std::size_t v = 0; v < config.d; ++v) {
      run += config.distribution.probs[v];
      cumulative[v] = run;
    }
  }
  JlParams jl{};
  if (config.mechanism == Mechanism::kDistLearn) {
    jl = jl_params(budgets, config.jl_beta, config.d, config.gamma_variant);
  }

  ErrorSample out;
  out.errors.resize(config.trials);
  out.trial_seeds.resize(config.trials);

  auto run_one = [&](std::size_t t) {
    RngStream meta(config.master_seed, kTrialStreamBase + t);
    const std::uint64_t trial_seed = meta.next_u64();
    const std::uint64_t phi_seed = meta.next_u64();
    out.trial_seeds[t] = trial_seed;
    RngStream data_rng(trial_seed, kDataStream);

    switch (config.mechanism) {
      case Mechanism::kLaplace:
      case Mechanism::kRr: {
        const double theta = config.distribution.theta;
        std::vector<double> xs(config.n);
        if (config.distribution.kind == TrueDistribution::Kind::kPointMass) {
          std::fill(xs.begin(), xs.end(), theta);
        } else {
          for (auto& x : xs) x = data_rng.bernoulli(0.5 * (1.0 + theta)) ? 1.0 : -1.0;
        }
        auto reports = privatize_scalar_users(xs, budgets, config.mechanism, trial_seed);
        ScalarEstimateOptions opts;
        opts.clamp = config.clamp;
        ScalarEstimate est = config.mechanism == Mechanism::kLaplace
                                 ? laplace_estimate(reports, budgets, opts)
                                 : rr_estimate(reports, budgets, opts);
        double diff = est.theta_hat - theta;
        out.errors[t] = diff * diff;
        break;
      }
      case Mechanism::kDuchi: {
        std::vector<std::vector<double>> xs(config.n, config.distribution.coords);
        auto reports = privatize_ball_users(xs, config.r, budgets, trial_seed);
        VectorEstimateOptions opts;
        opts.norm_cap = config.clamp;
        VectorEstimate est = multidim_estimate(reports, budgets, opts);
        CompensatedSum<double> err;
        for (std::size_t j = 0; j < config.d; ++j) {
          double diff = est.theta_hat[j] - config.distribution.coords[j];
          err.add(diff * diff);
        }
        out.errors[t] = err.value();
        break;
      }
      case Mechanism::kDistLearn: {
        ProjectionMatrix proj(jl.m, config.d, phi_seed);
        std::vector<std::optional<std::size_t>> items(config.n);
        for (auto& item : items) item = detail::sample_categorical(cumulative, data_rng);
        auto reports = privatize_item_users(items, budgets, proj, trial_seed);
        std::vector<double> z_bar = aggregate_reports(reports, budgets, proj);
        FrequencyEstimate est = estimate_distribution(z_bar, proj, jl.gamma);
        if (config.simplex_project) est = project_to_simplex(est);
        double linf = 0;
        for (std::size_t v = 0; v < config.d; ++v) {
          linf = std::max(linf, std::abs(est.p_hat[v] - config.distribution.probs[v]));
        }
        out.errors[t] = linf;
        break;
      }
    }
  };

  unsigned workers = config.threads > 0 ? config.threads
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(config.trials));
  if (workers <= 1) {
    for (std::size_t t = 0; t < config.trials; ++t) run_one(t);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < config.trials; t += workers) run_one(t);
      });
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

// --- quantiles --------------------------------------------------------------

// Upper (conservative) empirical quantile: the ceil((1-β)·N)-th order
// statistic, matching the "with probability at least 1-β" direction.
inline double empirical_quantile(const ErrorSample& sample, double beta) {
  if (sample.errors.empty()) throw std::invalid_argument("empty error sample");
  if (!(beta > 0.0) || !(beta < 1.0)) {
    throw std::invalid_argument("confidence parameter beta must lie in (0,1)");
  }
  std::vector<double> sorted = sample.errors;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  auto k = static_cast<std::size_t>(std::ceil((1.0 - beta) * n - 1e-9));
  k = std::clamp<std::size_t>(k, 1, sorted.size());
  return sorted[k - 1];
}

// --- privacy audits ---------------------------------------------------------

struct AuditResult {
  Mechanism mechanism;
  double epsilon;
  double max_log_ratio;
  bool analytic;
};

// Randomized response moves between two outputs with probabilities
// e^ε/(e^ε+1) and 1/(e^ε+1); the worst-case log likelihood ratio over
// outputs and input pairs is their log-odds.
inline AuditResult audit_rr(double epsilon) {
  validate_epsilon(epsilon);
  double keep = rr_keep_probability(epsilon);
  double flip = std::exp(-epsilon) / (1.0 + std::exp(-epsilon));
  return AuditResult{Mechanism::kRr, epsilon, std::log(keep) - std::log(flip), true};
}

// Density-ratio audit of the Laplace mechanism on the worst-case input pair
// x = 1, x' = -1, evaluated on a caller-supplied output grid;
// |log f(y-1) - log f(y+1)| = (|y+1| - |y-1|) / (2/ε), which reaches ε for
// every |y| >= 1.
inline AuditResult audit_laplace(double epsilon, std::span<const double> grid) {
  validate_epsilon(epsilon);
  if (grid.empty()) throw std::invalid_argument("laplace audit requires a non-empty grid");
  const double b = 2.0 / epsilon;
  double worst = 0;
  for (double y : grid) {
    worst = std::max(worst, std::abs(std::abs(y + 1.0) - std::abs(y - 1.0)) / b);
  }
  return AuditResult{Mechanism::kLaplace, epsilon, worst, true};
}

struct DuchiAuditResult {
  AuditResult audit;
  double expected_hemisphere_mass;
  double observed_hemisphere_mass;
  std::size_t draws;
};

// The sphere randomizer's output density is a two-level mixture over
// hemispheres whose weights are exactly the randomized-response pair, so the
// worst-case log ratio equals the RR log-odds. The Monte Carlo side checks
// the hemisphere mass 1/2 + (||x||/2r)·(e^ε-1)/(e^ε+1) empirically.
inline DuchiAuditResult audit_duchi(double epsilon, double norm_fraction,
                                    std::uint64_t seed = 0, std::size_t draws = 100000,
                                    std::size_t d = 3) {
  double expected = duchi_hemisphere_mass(epsilon, norm_fraction);
  AuditResult base = audit_rr(epsilon);
  base.mechanism = Mechanism::kDuchi;

  std::vector<double> direction(d, 0.0);
  direction[0] = 1.0;
  std::vector<double> x(d, 0.0);
  x[0] = norm_fraction;  // r = 1
  RngStream rng(seed, 0);
  std::size_t agree = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    DuchiReport rep = duchi_privatize(BallPoint{x, 1.0}, epsilon, rng);
    if (dot(rep.point.coords, direction) > 0) ++agree;
  }
  double observed = static_cast<double>(agree) / static_cast<double>(draws);
  return DuchiAuditResult{base, expected, observed, draws};
}

// --- exact randomized-response oracle --------------------------------------

// Exact distribution of the squared estimator error for small n, found by
// enumerating every output sign pattern. Outputs are independent across
// users with P[y_i = +1] = ((1+θ)/2)·keep_i + ((1-θ)/2)·(1-keep_i), and each
// pattern's estimator value reuses the estimator's own coefficient array and
// summation order, so enumerated values coincide bit-exactly with simulated
// ones.
struct ExactErrorCdf {
  std::vector<double> support;  // ascending distinct squared errors
  std::vector<double> prob;     // point masses
  std::vector<double> cdf;      // cumulative
  double mean_squared_error;
};

inline ExactErrorCdf rr_exact_error_cdf(double theta, const PrivacyBudgets& budgets) {
  const std::size_t n = budgets.size();
  if (n > 20) {
    throw std::invalid_argument("exact enumeration is limited to n <= 20 users");
  }
  if (!(std::abs(theta) <= 1.0)) {
    throw std::invalid_argument("theta must lie in [-1,1]");
  }
  std::vector<double> p_plus(n);
  for (std::size_t i = 0; i < n; ++i) {
    double keep = rr_keep_probability(budgets.epsilons()[i]);
    p_plus[i] = 0.5 * (1.0 + theta) * keep + 0.5 * (1.0 - theta) * (1.0 - keep);
  }
  const std::vector<double> coeffs = rr_estimate_coefficients(budgets);

  const std::size_t patterns = 1ULL << n;
  std::vector<std::pair<double, double>> outcomes;  // (squared error, prob)
  outcomes.reserve(patterns);
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    CompensatedSum<double> value;
    double prob = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool plus = (mask >> i) & 1ULL;
      value.add(plus ? coeffs[i] : -coeffs[i]);
      prob *= plus ? p_plus[i] : 1.0 - p_plus[i];
    }
    const double diff = value.value() - theta;
    outcomes.emplace_back(diff * diff, prob);
  }
  std::sort(outcomes.begin(), outcomes.end());

  ExactErrorCdf out;
  CompensatedSum<double> mean;
  double cumulative = 0;
  for (const auto& [err, prob] : outcomes) {
    mean.add(err * prob);
    cumulative += prob;
    if (!out.support.empty() && out.support.back() == err) {
      out.prob.back() += prob;
      out.cdf.back() = cumulative;
    } else {
      out.support.push_back(err);
      out.prob.push_back(prob);
      out.cdf.push_back(cumulative);
    }
  }
  out.mean_squared_error = mean.value();
  return out;
}

// Kolmogorov sup-distance between an exact CDF and the empirical CDF of a
// sample, evaluated at every jump point from both sides.
inline double dkw_sup_distance(const ExactErrorCdf& exact, std::span<const double> sample) {
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double sup = 0;
  for (std::size_t k = 0; k < exact.support.size(); ++k) {
    const double e = exact.support[k];
    const double below =
        static_cast<double>(std::lower_bound(sorted.begin(), sorted.end(), e) -
                            sorted.begin()) /
        n;
    const double at_or_below =
        static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), e) -
                            sorted.begin()) /
        n;
    const double exact_before = k == 0 ? 0.0 : exact.cdf[k - 1];
    sup = std::max(sup, std::abs(at_or_below - exact.cdf[k]));
    sup = std::max(sup, std::abs(below - exact_before));
  }
  return sup;
}

// --- bound-shape comparison --------------------------------------------------

struct BoundComparisonRow {
  double beta;
  double empirical_quantile;
  double shape;
  double fitted_constant;
  double residual;  // (q - C·s) / (C·s)
};

// Least-squares fit of the empirical quantiles against a constant-free
// reference shape over the β grid: q(β) ≈ C·shape(β), through the origin.
inline std::vector<BoundComparisonRow> bound_comparison(
    const ErrorSample& sample, std::span<const double> betas,
    const std::function<double(double)>& shape_fn) {
  if (sample.errors.empty()) throw std::invalid_argument("empty error sample");
  if (betas.empty()) throw std::invalid_argument("bound comparison requires betas");

  std::vector<double> sorted = sample.errors;
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&](double beta) {
    const double n = static_cast<double>(sorted.size());
    auto k = static_cast<std::size_t>(std::ceil((1.0 - beta) * n - 1e-9));
    k = std::clamp<std::size_t>(k, 1, sorted.size());
    return sorted[k - 1];
  };

  std::vector<double> q(betas.size()), s(betas.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0) || !(betas[i] < 1.0)) {
      throw std::invalid_argument("confidence parameter beta must lie in (0,1)");
    }
    q[i] = quantile(betas[i]);
    s[i] = shape_fn(betas[i]);
    num += q[i] * s[i];
    den += s[i] * s[i];
  }
  if (!(den > 0)) {
    throw std::invalid_argument("degenerate (all-zero) reference shape");
  }
  const double fitted = num / den;

  std::vector<BoundComparisonRow> rows(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) {
    double denom = fitted * s[i];
    double residual = denom != 0 ? (q[i] - denom) / denom : (q[i] == 0 ? 0.0 : INFINITY);
    rows[i] = BoundComparisonRow{betas[i], q[i], s[i], fitted, residual};
  }
  return rows;
}

// --- reference curves --------------------------------------------------------

// Upper reference shape for the distribution-learning L-infinity error:
// min(sqrt(log(d/β)/Σε²), 1).
inline double distlearn_bound_shape(const PrivacyBudgets& budgets, double beta,
                                    std::size_t d) {
  if (!(beta > 0.0) || !(beta < 1.0)) {
    throw std::invalid_argument("confidence parameter beta must lie in (0,1)");
  }
  double shape =
      std::sqrt(std::log(static_cast<double>(d) / beta) / budgets.sum_epsilon_squared());
  return std::min(shape, 1.0);
}

// Scalar minimax lower-bound curve min(log(1/(4β(1-β)))/(8Σε²), 1), emitted in
// reports as a visual reference only.
inline double scalar_lower_shape(const PrivacyBudgets& budgets, double beta) {
  if (!(beta > 0.0) || !(beta < 0.5)) return std::numeric_limits<double>::quiet_NaN();
  double numerator = std::log(1.0 / (4.0 * beta * (1.0 - beta)));
  return std::min(numerator / (8.0 * budgets.sum_epsilon_squared()), 1.0);
}

// Multi-dimensional minimax lower-bound curve, visual reference only.
inline double multidim_lower_shape(const PrivacyBudgets& budgets, double beta,
                                   std::size_t d, double r) {
  double s = budgets.sum_epsilon_squared();
  double log_term = -std::log(beta);
  double shape = std::min({1.0, (log_term + static_cast<double>(d)) / s,
                           log_term / s + 1.0 / std::sqrt(s)});
  return r * r * shape;
}

}  // namespace hetldp

#endif  // HETLDP_HARNESS_HPP_
