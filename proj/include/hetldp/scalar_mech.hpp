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

#ifndef HETLDP_SCALAR_MECH_HPP_
#define HETLDP_SCALAR_MECH_HPP_

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hetldp/budgets.hpp"
#include "hetldp/numeric.hpp"
#include "hetldp/random.hpp"

namespace hetldp {

enum class ScalarMechanism { kLaplace, kRr };

// One user's privatized scalar. Laplace reports are unbounded reals; RR
// reports are exactly ±1.
struct ScalarReport {
  double value;
  double epsilon;
  ScalarMechanism mechanism;
};

struct ScalarEstimateOptions {
  // Clamp the estimate to [-1, 1]; the true mean always lies there, so this
  // post-processing never increases the error. The raw value is kept.
  bool clamp = true;
  // When set, output 0 whenever the reference bound shape at this beta has
  // saturated at 1 (the regime where no estimator beats the trivial one).
  std::optional<double> zero_fallback_beta;
};

struct ScalarEstimate {
  double theta_hat = 0;   // post-processed estimate
  double theta_raw = 0;   // weighted sum before clamping / fallback
  bool clamped = false;
  bool zero_fallback = false;
  WeightScheme scheme;
};

// Keep probability e^ε / (e^ε + 1) of randomized response.
inline double rr_keep_probability(double epsilon) {
  validate_epsilon(epsilon);
  return 1.0 / (1.0 + std::exp(-epsilon));
}

// Adds Laplace noise of scale 2/ε (the width-2 domain [-1,1] has sensitivity
// 2). Inputs outside [-1,1] are rejected rather than clipped: clipping would
// silently change the sensitivity the noise was calibrated for.
inline ScalarReport laplace_privatize(double x, double epsilon, RngStream& rng) {
  validate_epsilon(epsilon);
  if (!(std::abs(x) <= 1.0)) {
    throw std::invalid_argument("laplace input must lie in [-1,1], got " +
                                std::to_string(x));
  }
  return ScalarReport{x + rng.laplace(2.0 / epsilon), epsilon, ScalarMechanism::kLaplace};
}

// Randomized response on x ∈ {-1,+1}: keep x with probability e^ε/(e^ε+1),
// flip otherwise.
inline ScalarReport rr_privatize(double x, double epsilon, RngStream& rng) {
  if (x != 1.0 && x != -1.0) {
    throw std::invalid_argument("randomized response input must be exactly -1 or +1");
  }
  bool keep = rng.bernoulli(rr_keep_probability(epsilon));
  return ScalarReport{keep ? x : -x, epsilon, ScalarMechanism::kRr};
}

namespace detail {

inline void check_reports(std::span<const ScalarReport> reports,
                          const PrivacyBudgets& budgets, ScalarMechanism expected) {
  if (reports.size() != budgets.size()) {
    throw std::invalid_argument("report count " + std::to_string(reports.size()) +
                                " does not match budget count " +
                                std::to_string(budgets.size()));
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].mechanism != expected) {
      throw std::invalid_argument("report " + std::to_string(i) +
                                  " was produced by a different mechanism");
    }
    if (reports[i].epsilon != budgets.epsilons()[i]) {
      throw std::invalid_argument("report " + std::to_string(i) +
                                  " carries a privacy parameter that does not match "
                                  "the supplied budgets");
    }
  }
}

inline ScalarEstimate finish_scalar_estimate(double raw, const PrivacyBudgets& budgets,
                                             WeightScheme scheme,
                                             const ScalarEstimateOptions& options) {
  ScalarEstimate est;
  est.theta_raw = raw;
  est.theta_hat = raw;
  est.scheme = scheme;
  if (options.zero_fallback_beta &&
      scalar_bound_shape(budgets, *options.zero_fallback_beta) >= 1.0) {
    est.theta_hat = 0.0;
    est.zero_fallback = true;
    return est;
  }
  if (options.clamp && std::abs(raw) > 1.0) {
    est.theta_hat = raw > 0 ? 1.0 : -1.0;
    est.clamped = true;
  }
  return est;
}

}  // namespace detail

// Server aggregate for Laplace reports: θ̂ = Σ w_i y_i with w_i ∝ (1+1/ε_i²)^-1.
inline ScalarEstimate laplace_estimate(std::span<const ScalarReport> reports,
                                       const PrivacyBudgets& budgets,
                                       const ScalarEstimateOptions& options = {}) {
  detail::check_reports(reports, budgets, ScalarMechanism::kLaplace);
  WeightVector w = laplace_weights(budgets);
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i < reports.size(); ++i) acc.add(w.weights[i] * reports[i].value);
  return detail::finish_scalar_estimate(acc.value(), budgets, w.scheme, options);
}

// Per-user aggregate coefficients w_i c_i of the randomized-response
// estimator. Shared by the estimator, the trial runner, and the exact
// enumeration oracle so all three produce bit-identical sums.
inline std::vector<double> rr_estimate_coefficients(const PrivacyBudgets& budgets) {
  WeightVector w = rr_inverse_variance_weights(budgets);
  std::vector<double> coeffs(budgets.size());
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    coeffs[i] = w.weights[i] * rr_scale(budgets.epsilons()[i]).c;
  }
  return coeffs;
}

// Server aggregate for RR reports: θ̂ = Σ w_i c_i y_i with w_i ∝ 1/c_i².
// The c_i factor undoes the flip bias, making the estimate unbiased for the
// population mean.
inline ScalarEstimate rr_estimate(std::span<const ScalarReport> reports,
                                  const PrivacyBudgets& budgets,
                                  const ScalarEstimateOptions& options = {}) {
  detail::check_reports(reports, budgets, ScalarMechanism::kRr);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].value != 1.0 && reports[i].value != -1.0) {
      throw std::invalid_argument("RR report " + std::to_string(i) + " is not ±1");
    }
  }
  std::vector<double> coeffs = rr_estimate_coefficients(budgets);
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i < reports.size(); ++i) acc.add(coeffs[i] * reports[i].value);
  return detail::finish_scalar_estimate(acc.value(), budgets,
                                        WeightScheme::kRrInverseVariance, options);
}

}  // namespace hetldp

#endif  // HETLDP_SCALAR_MECH_HPP_
