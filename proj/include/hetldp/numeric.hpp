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

#ifndef HETLDP_NUMERIC_HPP_
#define HETLDP_NUMERIC_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace hetldp {

// Neumaier-compensated accumulator. Error stays O(machine epsilon)
// independent of the number of terms, which keeps weight normalization and
// million-term reductions stable.
template <typename T = double>
class CompensatedSum {
 public:
  void add(T value) {
    T t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

inline double compensated_sum(std::span<const double> values) {
  CompensatedSum<double> acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

// sum_i coeffs[i] * values[i], compensated, in index order. Both the trial
// runner and the file-mediated estimators go through this single routine so
// their outputs are bit-identical.
inline double weighted_sum(std::span<const double> coeffs,
                           std::span<const double> values) {
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc.add(coeffs[i] * values[i]);
  return acc.value();
}

inline double squared_norm(std::span<const double> v) {
  CompensatedSum<double> acc;
  for (double x : v) acc.add(x * x);
  return acc.value();
}

inline double l2_norm(std::span<const double> v) { return std::sqrt(squared_norm(v)); }

inline double dot(std::span<const double> a, std::span<const double> b) {
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
  return acc.value();
}

struct LinearFit {
  double intercept = 0;
  double slope = 0;
  double r_squared = 1;
};

// Ordinary least squares of y on x with an intercept.
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double pred = fit.intercept + fit.slope * x[i];
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - my) * (y[i] - my);
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace hetldp

#endif  // HETLDP_NUMERIC_HPP_
