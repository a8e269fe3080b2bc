#pragma once

// Pay tables: per-category return per unit bet, at maximum bet.
//
// Tables are exact Rationals and round-trip through a small text format so
// nonstandard machines can be analyzed from a config file. The exact engine
// works in scaled integers, so validate() enforces the bound it relies on.

#include "nplay/eval.hpp"
#include "nplay/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace nplay {

enum class PayVariant : std::uint8_t { standard, deuces_wild };

std::string_view pay_variant_name(PayVariant v);
PayVariant pay_variant_from_name(std::string_view name);

struct PayTable {
    PayVariant variant = PayVariant::standard;
    std::string name;
    std::array<Rational, kNumCategories> payout;  // unlisted categories pay 0

    bool operator==(const PayTable&) const = default;

    /// Least common multiple of the payout denominators; payout * scale()
    /// is integral for every category.
    unsigned long scale() const;

    /// Scaled payouts as integers, the engine's working representation.
    std::array<std::uint64_t, kNumCategories> scaled_payouts() const;

    /// Rejects negative payouts and tables whose scaled payouts exceed
    /// 10^6, the overflow headroom the integer engine is sized for.
    void validate() const;

    /// Stable digest of variant and payouts (name excluded), used to match
    /// strategy caches to the table that produced them.
    std::uint64_t fingerprint() const;

    std::string serialize() const;
    static PayTable parse(const std::string& text);

    /// Built-ins: "jacks-or-better-9-6" and "deuces-wild-full-pay".
    static PayTable preset(const std::string& preset_name);
};

}  // namespace nplay
