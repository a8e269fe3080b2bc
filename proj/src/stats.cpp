#include "nplay/stats.hpp"

#include <stdexcept>

namespace nplay {

SummaryStats SummaryStats::from_moments(const Rational& mean, const Rational& variance,
                                        int sd_places) {
    if (variance.sign() < 0) throw std::domain_error("stats: negative variance");
    SummaryStats s;
    s.mean = mean;
    s.variance = variance;
    s.std_dev = variance.sqrt_decimal(sd_places);
    return s;
}

SummaryStats sample_mean_stats(const Rational& mean1, const Rational& var1,
                               const Rational& cov12, unsigned n) {
    if (n == 0) throw std::domain_error("stats: n must be positive");
    Rational inv_n(1, (long)n);
    Rational var = inv_n * var1 + (Rational(1) - inv_n) * cov12;
    return SummaryStats::from_moments(mean1, var);
}

}  // namespace nplay
