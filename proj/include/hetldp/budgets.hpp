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

#ifndef HETLDP_BUDGETS_HPP_
#define HETLDP_BUDGETS_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hetldp/numeric.hpp"

namespace hetldp {

inline void validate_epsilon(double epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("privacy parameter must be positive and finite, got " +
                                std::to_string(epsilon));
  }
}

// Per-user privacy parameters ε_1..ε_n. Immutable after construction.
// Budgets with ε_i > 1 are accepted (the mechanisms stay ε_i-private); the
// flag only marks that the error-bound regime ε_i ≤ 1 does not apply.
class PrivacyBudgets {
 public:
  explicit PrivacyBudgets(std::vector<double> epsilons)
      : epsilons_(std::move(epsilons)) {
    if (epsilons_.empty()) {
      throw std::invalid_argument("privacy budgets must contain at least one user");
    }
    for (double e : epsilons_) {
      validate_epsilon(e);
      if (e > 1.0) any_above_one_ = true;
    }
  }

  const std::vector<double>& epsilons() const { return epsilons_; }
  std::size_t size() const { return epsilons_.size(); }
  bool any_above_one() const { return any_above_one_; }

  double sum_epsilon_squared() const {
    CompensatedSum<double> acc;
    for (double e : epsilons_) acc.add(e * e);
    return acc.value();
  }

 private:
  std::vector<double> epsilons_;
  bool any_above_one_ = false;
};

// Debiasing constant c = (e^ε + 1) / (e^ε − 1), evaluated as 1 + 2/expm1(ε)
// so small ε keeps full relative precision. c > 1 for finite ε and c → 1 as
// ε → ∞.
struct RrScale {
  double c;
};

inline RrScale rr_scale(double epsilon) {
  validate_epsilon(epsilon);
  return RrScale{1.0 + 2.0 / std::expm1(epsilon)};
}

enum class WeightScheme {
  kLaplaceInverse,     // w_i ∝ (1 + 1/ε_i²)^-1
  kRrInverseVariance,  // w_i ∝ 1/c_i²
  kEpsilonSquared,     // w_i ∝ ε_i²
};

inline const char* weight_scheme_name(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::kLaplaceInverse: return "laplace_inverse";
    case WeightScheme::kRrInverseVariance: return "rr_inverse_variance";
    case WeightScheme::kEpsilonSquared: return "epsilon_squared";
  }
  return "unknown";
}

// Normalized aggregation weights. weights.size() matches the budgets it was
// built from; entries are nonnegative and sum to 1.
struct WeightVector {
  std::vector<double> weights;
  WeightScheme scheme;
};

namespace detail {

// Raw weights are produced and normalized in extended precision so that very
// small budgets (ε² below double underflow) still normalize. If even the
// long-double sum underflows to zero there is no meaningful normalization and
// we refuse rather than invent one.
template <typename RawFn>
WeightVector normalize_weights(const PrivacyBudgets& budgets, WeightScheme scheme,
                               RawFn raw) {
  std::vector<long double> raw_weights(budgets.size());
  CompensatedSum<long double> total;
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    raw_weights[i] = raw(static_cast<long double>(budgets.epsilons()[i]));
    total.add(raw_weights[i]);
  }
  const long double sum = total.value();
  if (!(sum > 0) || !std::isfinite(static_cast<double>(sum))) {
    throw std::domain_error(
        "weight normalization underflowed: all budgets are too small to carry "
        "representable weight");
  }
  WeightVector out{std::vector<double>(budgets.size()), scheme};
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    out.weights[i] = static_cast<double>(raw_weights[i] / sum);
  }
  return out;
}

inline long double rr_scale_ext(long double epsilon) {
  return 1.0L + 2.0L / std::expm1(epsilon);
}

}  // namespace detail

// Weights for the Laplace-noise aggregate: w_i ∝ (1 + 1/ε_i²)^-1 = ε_i²/(1+ε_i²).
inline WeightVector laplace_weights(const PrivacyBudgets& budgets) {
  return detail::normalize_weights(budgets, WeightScheme::kLaplaceInverse,
                                   [](long double e) { return e * e / (1.0L + e * e); });
}

// Weights for the randomized-response aggregate: w_i ∝ 1/c_i², the inverse of
// the per-user debiased report variance.
inline WeightVector rr_inverse_variance_weights(const PrivacyBudgets& budgets) {
  return detail::normalize_weights(budgets, WeightScheme::kRrInverseVariance,
                                   [](long double e) {
                                     long double c = detail::rr_scale_ext(e);
                                     return 1.0L / (c * c);
                                   });
}

// Weights for the sphere-randomizer aggregate: w_i ∝ ε_i².
inline WeightVector epsilon_squared_weights(const PrivacyBudgets& budgets) {
  return detail::normalize_weights(budgets, WeightScheme::kEpsilonSquared,
                                   [](long double e) { return e * e; });
}

// Constant-free reference shape min(log(1/β)/Σε_i², 1) for the scalar
// mean-estimation error quantile. Used for report curves and fitted
// constants, never asserted as a guarantee.
inline double scalar_bound_shape(const PrivacyBudgets& budgets, double beta) {
  if (!(beta > 0.0) || !(beta < 1.0)) {
    throw std::invalid_argument("confidence parameter beta must lie in (0,1), got " +
                                std::to_string(beta));
  }
  return std::min(-std::log(beta) / budgets.sum_epsilon_squared(), 1.0);
}

}  // namespace hetldp

#endif  // HETLDP_BUDGETS_HPP_
