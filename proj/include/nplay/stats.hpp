#pragma once

// Moments of the average of n exchangeable payoffs.
//
// For exchangeable R_1..R_n with common mean mu, variance v, and pairwise
// covariance c, the sample mean (R_1 + ... + R_n)/n has
//
//     mean     = mu
//     variance = v/n + (1 - 1/n) c
//
// This identity is the backbone of every n-run / n-play table produced by
// this project: each engine computes the exact single-round moments and the
// pairwise covariance, and this module turns them into per-n rows.

#include "nplay/rational.hpp"

#include <string>

namespace nplay {

struct SummaryStats {
    Rational mean;
    Rational variance;        // exact, must be >= 0
    std::string std_dev;      // decimal rendering of sqrt(variance)

    static SummaryStats from_moments(const Rational& mean, const Rational& variance,
                                     int sd_places = 6);
};

/// Exact moments of the average of n exchangeable draws.
/// Throws std::domain_error when n == 0 or the resulting variance is negative
/// (which would mean the inputs are not a valid exchangeable pair).
SummaryStats sample_mean_stats(const Rational& mean1, const Rational& var1,
                               const Rational& cov12, unsigned n);

}  // namespace nplay
