//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#include "molmech/stats.hpp"

#include <algorithm>
#include <cmath>

#include "molmech/rng.hpp"

namespace molmech {

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double pop_stddev(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size()));
}

ConfidenceInterval bootstrap_mean_ci(std::span<const double> xs, uint64_t seed,
                                     int n_resamples, double alpha) {
  ConfidenceInterval ci;
  ci.point = mean(xs);
  if (xs.size() < 2 || n_resamples < 2) {
    ci.lo = ci.hi = ci.point;
    return ci;
  }
  Rng rng(seed);
  std::vector<double> means(static_cast<size_t>(n_resamples));
  const uint64_t n = xs.size();
  for (auto& m : means) {
    double s = 0.0;
    for (uint64_t i = 0; i < n; ++i) s += xs[rng.uniform_int(n)];
    m = s / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());
  // Nearest-rank percentiles, clamped to the sample range.
  auto pct = [&](double q) {
    const double pos = q * static_cast<double>(n_resamples - 1);
    const auto idx = static_cast<size_t>(std::llround(pos));
    return means[std::min(idx, means.size() - 1)];
  };
  ci.lo = pct(alpha / 2.0);
  ci.hi = pct(1.0 - alpha / 2.0);
  return ci;
}

}  // namespace molmech
