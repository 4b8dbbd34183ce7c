//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#ifndef MOLMECH_STATS_HPP
#define MOLMECH_STATS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace molmech {

double mean(std::span<const double> xs);

/// Population standard deviation (divides by N, not N-1).
double pop_stddev(std::span<const double> xs);

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
  double point = 0.0;  // sample mean
};

/// Percentile bootstrap CI for the mean. n_resamples defaults to 1000 and
/// alpha to 0.05 (95% interval). Deterministic for a fixed seed.
ConfidenceInterval bootstrap_mean_ci(std::span<const double> xs, uint64_t seed,
                                     int n_resamples = 1000,
                                     double alpha = 0.05);

}  // namespace molmech

#endif
