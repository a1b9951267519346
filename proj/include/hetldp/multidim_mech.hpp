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

#ifndef HETLDP_MULTIDIM_MECH_HPP_
#define HETLDP_MULTIDIM_MECH_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hetldp/budgets.hpp"
#include "hetldp/numeric.hpp"
#include "hetldp/random.hpp"
#include "hetldp/scalar_mech.hpp"

namespace hetldp {

// A point in the Euclidean ball of the given radius: ||coords|| ≤ r (1+1e-9).
struct BallPoint {
  std::vector<double> coords;
  double ball_radius;
};

// One user's privatized vector: a point on the sphere of radius
// duchi_radius(d, r, ε).
struct DuchiReport {
  SpherePoint point;
  double epsilon;
  double ball_radius;
  std::size_t dim() const { return point.coords.size(); }
};

struct VectorEstimateOptions {
  // Rescale the aggregate onto the radius-r ball when it falls outside; the
  // true mean always lies inside, so the projection never increases the
  // error. The raw vector is kept.
  bool norm_cap = true;
};

struct VectorEstimate {
  std::vector<double> theta_hat;  // post-processed estimate
  std::vector<double> theta_raw;  // weighted sum before the norm cap
  bool norm_capped = false;
};

// Output-sphere radius of the hemisphere randomizer. The first moment of a
// uniform draw from the upper half of the unit sphere is
// Γ(d/2) / (√π Γ((d+1)/2)) along the pole, and the randomized hemisphere
// choice contributes a factor (||x||/r)·(e^ε-1)/(e^ε+1), so
//   B = c(ε) · r · √π · Γ((d+1)/2) / Γ(d/2)
// is exactly what makes E[Y] = x. Evaluated through log-Gamma differences so
// it stays finite up to d ~ 10^6 and beyond.
inline double duchi_radius(std::size_t d, double r, double epsilon) {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  if (!(r > 0) || !std::isfinite(r)) {
    throw std::invalid_argument("ball radius must be positive and finite");
  }
  double c = rr_scale(epsilon).c;
  double dd = static_cast<double>(d);
  double log_ratio = std::lgamma((dd + 1.0) / 2.0) - std::lgamma(dd / 2.0);
  return c * r * std::exp(0.5 * std::log(std::numbers::pi) + log_ratio);
}

// Probability that the randomizer's output lands on the hemisphere agreeing
// with the input direction: 1/2 + (||x||/2r)·(e^ε-1)/(e^ε+1).
inline double duchi_hemisphere_mass(double epsilon, double norm_fraction) {
  validate_epsilon(epsilon);
  if (!(norm_fraction >= 0.0) || !(norm_fraction <= 1.0)) {
    throw std::invalid_argument("norm fraction must lie in [0,1]");
  }
  return 0.5 + 0.5 * norm_fraction * std::tanh(epsilon / 2.0);
}

// Hemisphere randomizer for a ball point:
//   1. lift x to the r-sphere with a direction coin: pole = ±x/||x|| with
//      probabilities 1/2 ± ||x||/(2r)  (a uniformly random direction if x = 0,
//      where both signs are equally likely and any choice preserves E[Y] = 0);
//   2. draw T ~ Bernoulli(e^ε/(e^ε+1));
//   3. sample uniformly from the hemisphere of radius B around the pole if
//      T = 1, around the opposite pole otherwise.
// Draws are consumed in exactly that order so runs replay bit-for-bit.
inline DuchiReport duchi_privatize(const BallPoint& x, double epsilon, RngStream& rng) {
  validate_epsilon(epsilon);
  const std::size_t d = x.coords.size();
  if (d < 1) throw std::invalid_argument("ball point must have dimension at least 1");
  const double r = x.ball_radius;
  if (!(r > 0) || !std::isfinite(r)) {
    throw std::invalid_argument("ball radius must be positive and finite");
  }
  const double norm = l2_norm(x.coords);
  if (!(norm <= r * (1.0 + 1e-9))) {
    throw std::invalid_argument("ball point norm " + std::to_string(norm) +
                                " exceeds the declared radius " + std::to_string(r));
  }

  std::vector<double> pole(d);
  if (norm == 0.0) {
    SpherePoint u = sample_sphere_uniform(d, 1.0, rng);
    pole = std::move(u.coords);
  } else {
    // Inputs inside the norm tolerance can push the coin past 1 by rounding.
    double p_same = std::min(0.5 + norm / (2.0 * r), 1.0);
    bool positive = rng.bernoulli(p_same);
    double scale = (positive ? 1.0 : -1.0) / norm;
    for (std::size_t i = 0; i < d; ++i) pole[i] = x.coords[i] * scale;
  }

  bool agree = rng.bernoulli(rr_keep_probability(epsilon));
  if (!agree) {
    for (double& p : pole) p = -p;
  }

  const double b = duchi_radius(d, r, epsilon);
  SpherePoint y = sample_hemisphere_uniform(d, b, pole, rng);
  return DuchiReport{std::move(y), epsilon, r};
}

// Server aggregate: θ̂ = Σ w_i Y_i with w_i ∝ ε_i². Mixed dimensions or ball
// radii are rejected; the protocol has no well-defined reconciliation for
// them.
inline VectorEstimate multidim_estimate(std::span<const DuchiReport> reports,
                                        const PrivacyBudgets& budgets,
                                        const VectorEstimateOptions& options = {}) {
  if (reports.size() != budgets.size()) {
    throw std::invalid_argument("report count does not match budget count");
  }
  if (reports.empty()) throw std::invalid_argument("no reports to aggregate");
  const std::size_t d = reports[0].dim();
  const double r = reports[0].ball_radius;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].dim() != d) {
      throw std::invalid_argument("report " + std::to_string(i) +
                                  " has mismatched dimension");
    }
    if (reports[i].ball_radius != r) {
      throw std::invalid_argument("report " + std::to_string(i) +
                                  " has mismatched ball radius");
    }
    if (reports[i].epsilon != budgets.epsilons()[i]) {
      throw std::invalid_argument("report " + std::to_string(i) +
                                  " carries a privacy parameter that does not match "
                                  "the supplied budgets");
    }
  }
  WeightVector w = epsilon_squared_weights(budgets);

  VectorEstimate est;
  est.theta_raw.resize(d);
  std::vector<CompensatedSum<double>> acc(d);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      acc[j].add(w.weights[i] * reports[i].point.coords[j]);
    }
  }
  for (std::size_t j = 0; j < d; ++j) est.theta_raw[j] = acc[j].value();

  est.theta_hat = est.theta_raw;
  double norm = l2_norm(est.theta_hat);
  if (options.norm_cap && norm > r) {
    double scale = r / norm;
    for (double& v : est.theta_hat) v *= scale;
    est.norm_capped = true;
  }
  return est;
}

// Constant-free reference shape r² · min((d + log(1/β)) / Σε_i², 1) for the
// squared ℓ2 error quantile of the multi-dimensional estimator.
inline double multidim_bound_shape(const PrivacyBudgets& budgets, double beta,
                                   std::size_t d, double r) {
  if (!(beta > 0.0) || !(beta < 1.0)) {
    throw std::invalid_argument("confidence parameter beta must lie in (0,1)");
  }
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  double shape =
      (static_cast<double>(d) - std::log(beta)) / budgets.sum_epsilon_squared();
  return r * r * std::min(shape, 1.0);
}

}  // namespace hetldp

#endif  // HETLDP_MULTIDIM_MECH_HPP_
