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

#ifndef HETLDP_RANDOM_HPP_
#define HETLDP_RANDOM_HPP_

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hetldp/numeric.hpp"

namespace hetldp {

namespace detail {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer (Steele, Lea & Flood; Vigna's fixed-increment variant).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Per-stream odd increment with enough bit transitions, as in the splittable
// generator construction.
inline constexpr std::uint64_t mix_gamma(std::uint64_t z) {
  z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDULL;
  z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
  z = (z ^ (z >> 33)) | 1ULL;
  if (std::popcount(z ^ (z >> 1)) < 24) z ^= 0xAAAAAAAAAAAAAAAAULL;
  return z;
}

}  // namespace detail

// Inverse CDF of the Laplace(0, scale) distribution on u ∈ (−1/2, 1/2).
inline double laplace_icdf(double u, double scale) {
  if (!(scale > 0) || !std::isfinite(scale)) {
    throw std::invalid_argument("laplace scale must be positive and finite");
  }
  if (!(u > -0.5) || !(u < 0.5)) {
    throw std::invalid_argument("laplace inverse-CDF argument must lie in (-1/2, 1/2)");
  }
  // -scale * sgn(u) * ln(1 - 2|u|), via log1p for precision near the median.
  return u < 0 ? scale * std::log1p(2.0 * u) : -scale * std::log1p(-2.0 * u);
}

// One deterministic pseudo-random stream. A stream is addressed by
// (seed, stream_id): the same pair replays the same draw sequence bit-exactly,
// and distinct stream_ids give statistically independent streams (each stream
// is a SplitMix64 sequence with its own increment).
//
// Stream-id conventions used across the project (documented in the README):
//   user privatization      stream_id = user index (0-based)
//   per-trial derivation    stream_id = 2^63 + trial index
//   budget generation       stream_id = 2^63 - 1
//   projection-seed fallback stream_id = 2^63 - 2
//   within-trial data draws  stream_id = 2^63
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : state_(detail::mix64(seed + detail::kGoldenGamma * stream_id)),
        gamma_(detail::mix_gamma(stream_id + detail::kGoldenGamma)) {}

  std::uint64_t next_u64() {
    state_ += gamma_;
    return detail::mix64(state_);
  }

  // Uniform double in the open interval (0, 1); never exactly 0 or 1.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform index in [0, bound). One draw per call.
  std::uint64_t next_index(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  bool bernoulli(double p) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
      throw std::invalid_argument("bernoulli probability must lie in [0,1], got " +
                                  std::to_string(p));
    }
    return next_unit() < p;
  }

  double laplace(double scale) { return laplace_icdf(next_unit() - 0.5, scale); }

  // Box-Muller pair; exactly two uniforms per call, no cached state.
  std::pair<double, double> normal_pair() {
    double u1 = next_unit();
    double u2 = next_unit();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  std::uint64_t state_;
  std::uint64_t gamma_;
};

inline double sample_laplace(double scale, RngStream& rng) { return rng.laplace(scale); }
inline bool sample_bernoulli(double p, RngStream& rng) { return rng.bernoulli(p); }

// A point on the sphere of the given radius: ||coords||_2 = radius up to
// 1e-9 relative.
struct SpherePoint {
  std::vector<double> coords;
  double radius;
};

// Uniform point on S^{d-1}(radius) via normalized Gaussians. A degenerate
// all-zero Gaussian vector is resampled.
inline SpherePoint sample_sphere_uniform(std::size_t d, double radius, RngStream& rng) {
  if (d < 1) throw std::invalid_argument("sphere dimension must be at least 1");
  if (!(radius > 0) || !std::isfinite(radius)) {
    throw std::invalid_argument("sphere radius must be positive and finite");
  }
  std::vector<double> coords(d);
  if (d == 1) {
    // S^0: an exact sign flip of the radius.
    double z = 0;
    while (z == 0) z = rng.normal_pair().first;
    coords[0] = z > 0 ? radius : -radius;
    return SpherePoint{std::move(coords), radius};
  }
  for (;;) {
    for (std::size_t i = 0; i + 1 < d; i += 2) {
      auto [z0, z1] = rng.normal_pair();
      coords[i] = z0;
      coords[i + 1] = z1;
    }
    if (d % 2 == 1) coords[d - 1] = rng.normal_pair().first;
    double norm = l2_norm(coords);
    if (norm > 0 && std::isfinite(norm)) {
      double scale = radius / norm;
      for (double& c : coords) c *= scale;
      return SpherePoint{std::move(coords), radius};
    }
  }
}

// Uniform point on the open hemisphere {||y|| = radius, <y, direction> > 0}.
// One sphere draw is reflected through the plane orthogonal to `direction`
// when it lands on the wrong side; reflection preserves the uniform measure.
// A draw landing exactly on the boundary (<y, direction> = 0) is resampled so
// the strict inequality holds for every output.
inline SpherePoint sample_hemisphere_uniform(std::size_t d, double radius,
                                             std::span<const double> direction,
                                             RngStream& rng) {
  if (direction.size() != d) {
    throw std::invalid_argument("hemisphere direction has dimension " +
                                std::to_string(direction.size()) + ", expected " +
                                std::to_string(d));
  }
  if (std::abs(l2_norm(direction) - 1.0) > 1e-9) {
    throw std::invalid_argument("hemisphere direction must be a unit vector");
  }
  for (;;) {
    SpherePoint point = sample_sphere_uniform(d, radius, rng);
    double t = dot(point.coords, direction);
    if (t > 0) return point;
    if (t < 0) {
      for (std::size_t i = 0; i < d; ++i) point.coords[i] -= 2.0 * t * direction[i];
      return point;
    }
    // t == 0: boundary tie, resample.
  }
}

}  // namespace hetldp

#endif  // HETLDP_RANDOM_HPP_
