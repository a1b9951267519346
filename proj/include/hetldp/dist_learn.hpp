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

#ifndef HETLDP_DIST_LEARN_HPP_
#define HETLDP_DIST_LEARN_HPP_

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
#include <utility>
#include <vector>

#include "hetldp/budgets.hpp"
#include "hetldp/numeric.hpp"
#include "hetldp/random.hpp"
#include "hetldp/scalar_mech.hpp"

namespace hetldp {

// Which published form of the projection accuracy parameter γ to use. The
// two differ in where the square root sits:
//   kProof:      γ² = log(2d/β) / Σ 1/c_i²
//   kAlgorithm:  γ  = √(log(2d/β)) / Σ 1/c_i²
// The proof form is what the error guarantee needs and is the default; the
// algorithm-line form is kept selectable for comparison.
enum class GammaVariant { kProof, kAlgorithm };

struct JlParams {
  double gamma;
  std::size_t m;  // compressed dimension, ceil'd and floored at 1
};

inline double sum_inverse_c_squared(const PrivacyBudgets& budgets) {
  CompensatedSum<double> acc;
  for (double e : budgets.epsilons()) {
    double c = rr_scale(e).c;
    acc.add(1.0 / (c * c));
  }
  return acc.value();
}

// Accuracy parameter γ and compressed dimension
// m = max(1, ceil(log(d+1)·log(2/β) / γ²)). m > d is allowed; the projection
// stays valid, it just stops compressing.
inline JlParams jl_params(const PrivacyBudgets& budgets, double beta, std::size_t d,
                          GammaVariant variant = GammaVariant::kProof) {
  if (!(beta > 0.0) || !(beta < 1.0)) {
    throw std::invalid_argument("confidence parameter beta must lie in (0,1)");
  }
  if (d < 2) throw std::invalid_argument("domain size must be at least 2");
  const double s = sum_inverse_c_squared(budgets);
  if (!(s > 0)) throw std::domain_error("degenerate budgets: sum of 1/c_i^2 vanished");
  const double log_term = std::log(2.0 * static_cast<double>(d) / beta);
  double gamma_sq;
  if (variant == GammaVariant::kProof) {
    gamma_sq = log_term / s;
  } else {
    double gamma = std::sqrt(log_term) / s;
    gamma_sq = gamma * gamma;
  }
  double m_raw = std::log(static_cast<double>(d) + 1.0) * std::log(2.0 / beta) / gamma_sq;
  std::size_t m = static_cast<std::size_t>(std::max(1.0, std::ceil(m_raw)));
  return JlParams{std::sqrt(gamma_sq), m};
}

// Shared ±1/√m projection matrix, stored implicitly as (seed, m, d). Entries
// are regenerated bit-exactly on demand from the seed (the shared-randomness
// contract), so memory stays O(1) and a single frequency query touches only
// one column.
class ProjectionMatrix {
 public:
  ProjectionMatrix(std::size_t m, std::size_t d, std::uint64_t seed)
      : m_(m), d_(d), seed_(seed), inv_sqrt_m_(1.0 / std::sqrt(static_cast<double>(m))) {
    if (m < 1 || d < 1) throw std::invalid_argument("projection dimensions must be positive");
  }

  std::size_t m() const { return m_; }
  std::size_t d() const { return d_; }
  std::uint64_t seed() const { return seed_; }

  int entry_sign(std::size_t row, std::size_t item) const {
    std::uint64_t h = detail::mix64(seed_ + detail::kGoldenGamma);
    h = detail::mix64(h + detail::kGoldenGamma * (row + 1));
    h = detail::mix64(h + detail::kGoldenGamma * (item + 1));
    return (h >> 63) ? 1 : -1;
  }

  double entry(std::size_t row, std::size_t item) const {
    return entry_sign(row, item) * inv_sqrt_m_;
  }

  double inv_sqrt_m() const { return inv_sqrt_m_; }

  // Column Φ e_item, materialized on demand.
  std::vector<double> column(std::size_t item) const {
    check_item(item);
    std::vector<double> col(m_);
    for (std::size_t row = 0; row < m_; ++row) col[row] = entry(row, item);
    return col;
  }

  // Compatibility fingerprint carried by report files.
  std::uint64_t seed_hash() const {
    std::uint64_t h = detail::mix64(seed_ ^ 0x9D5CF9A1B2E3C471ULL);
    h = detail::mix64(h + detail::kGoldenGamma * m_);
    h = detail::mix64(h + detail::kGoldenGamma * d_);
    return h;
  }

  void check_item(std::size_t item) const {
    if (item >= d_) {
      throw std::invalid_argument("item " + std::to_string(item) +
                                  " outside the domain of size " + std::to_string(d_));
    }
  }

 private:
  std::size_t m_;
  std::size_t d_;
  std::uint64_t seed_;
  double inv_sqrt_m_;
};

inline ProjectionMatrix generate_projection(std::size_t m, std::size_t d,
                                            std::uint64_t seed) {
  return ProjectionMatrix(m, d, seed);
}

// A user's one-sparse privatized report: coordinate `index` holds ±c_i·√m,
// every other coordinate is zero.
struct SparseReport {
  std::size_t index;
  double value;
  double epsilon;
};

// The explicit null item: a user holding nothing. With dense ±1/√m columns
// the projected vector of a real item is never zero, so this branch is only
// reachable through an explicit ⊥ input.
inline constexpr std::optional<std::size_t> kNullItem = std::nullopt;

// Local randomizer: project the user's one-hot vector, pick one coordinate
// j uniformly, keep its (inflated) value c·m·Φ_{j,x} with probability
// e^ε/(e^ε+1) and negate it otherwise. |m·Φ_{j,x}| = √m, so reports carry
// ±c√m. Draw order: coordinate first, then the keep/flip coin.
inline SparseReport local_randomize_item(std::optional<std::size_t> item, double epsilon,
                                         const ProjectionMatrix& proj, RngStream& rng) {
  validate_epsilon(epsilon);
  if (item) proj.check_item(*item);
  const std::size_t j = static_cast<std::size_t>(rng.next_index(proj.m()));
  const double c = rr_scale(epsilon).c;
  const double magnitude = c * std::sqrt(static_cast<double>(proj.m()));
  double value;
  if (item) {
    int sign = proj.entry_sign(j, *item);
    bool keep = rng.bernoulli(rr_keep_probability(epsilon));
    value = (keep ? 1.0 : -1.0) * sign * magnitude;
  } else {
    value = (rng.bernoulli(0.5) ? 1.0 : -1.0) * magnitude;
  }
  return SparseReport{j, value, epsilon};
}

// Server aggregation z̄ = Σ w_i ẑ_i with w_i ∝ 1/c_i², accumulated sparsely
// in report order.
inline std::vector<double> aggregate_reports(std::span<const SparseReport> reports,
                                             const PrivacyBudgets& budgets,
                                             const ProjectionMatrix& proj) {
  if (reports.size() != budgets.size()) {
    throw std::invalid_argument("report count does not match budget count");
  }
  WeightVector w = rr_inverse_variance_weights(budgets);
  std::vector<double> z_bar(proj.m(), 0.0);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].index >= proj.m()) {
      throw std::invalid_argument("report " + std::to_string(i) +
                                  " indexes coordinate " + std::to_string(reports[i].index) +
                                  " outside the compressed dimension " +
                                  std::to_string(proj.m()));
    }
    if (reports[i].epsilon != budgets.epsilons()[i]) {
      throw std::invalid_argument("report " + std::to_string(i) +
                                  " carries a privacy parameter that does not match "
                                  "the supplied budgets");
    }
    z_bar[reports[i].index] += w.weights[i] * reports[i].value;
  }
  return z_bar;
}

// Frequency oracle: p̂(v) = <z̄, Φ e_v>. O(m) per query.
inline double frequency_query(std::span<const double> z_bar, const ProjectionMatrix& proj,
                              std::size_t item) {
  proj.check_item(item);
  if (z_bar.size() != proj.m()) {
    throw std::invalid_argument("aggregate length does not match the compressed dimension");
  }
  CompensatedSum<double> acc;
  for (std::size_t row = 0; row < proj.m(); ++row) {
    acc.add(z_bar[row] * proj.entry(row, item));
  }
  return acc.value();
}

// A (possibly improper) estimated distribution over [d].
struct FrequencyEstimate {
  std::vector<double> p_hat;
  double gamma = std::numeric_limits<double>::quiet_NaN();
  std::size_t m = 0;
  bool simplex_projected = false;
};

// Runs the frequency oracle for every item: O(m·d).
inline FrequencyEstimate estimate_distribution(
    std::span<const double> z_bar, const ProjectionMatrix& proj,
    double gamma = std::numeric_limits<double>::quiet_NaN()) {
  FrequencyEstimate est;
  est.gamma = gamma;
  est.m = proj.m();
  est.p_hat.resize(proj.d());
  for (std::size_t v = 0; v < proj.d(); ++v) {
    est.p_hat[v] = frequency_query(z_bar, proj, v);
  }
  return est;
}

// Euclidean projection onto the probability simplex {q ≥ 0, Σq = 1} by the
// sort-and-threshold rule.
inline std::vector<double> simplex_project(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("cannot project an empty vector");
  for (double x : v) {
    if (!std::isfinite(x)) throw std::invalid_argument("simplex projection input must be finite");
  }
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double prefix = 0.0;
  double tau = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    prefix += sorted[i];
    double t = (prefix - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - t > 0) tau = t;
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - tau, 0.0);
  return out;
}

inline FrequencyEstimate project_to_simplex(const FrequencyEstimate& est) {
  FrequencyEstimate out = est;
  out.p_hat = simplex_project(est.p_hat);
  out.simplex_projected = true;
  return out;
}

}  // namespace hetldp

#endif  // HETLDP_DIST_LEARN_HPP_
