#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace nplay {

/// Exact binomial coefficient C(n, k); 0 when k > n.
inline mpz_class binomial(unsigned n, unsigned k) {
    if (k > n) return mpz_class(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// C(n, k) as uint64_t for the small arguments used in deal counting.
inline std::uint64_t binomial_u64(unsigned n, unsigned k) {
    return binomial(n, k).get_ui();
}

}  // namespace nplay
