#pragma once

// Exact n-play video poker analysis.
//
// One dealt hand, one hold decision, n conditionally independent draws each
// worth 1/n of the bet. The engine reduces the 2,598,960 deals to suit-
// isomorphism equivalence classes, picks the max-mean/min-variance hold for
// each class by exact integer comparison, and splits Var(R1) into the part
// explained by the deal and the part explained by the draw:
//
//     Var(R1) = V_deal + V_draw
//     Var(n-play average) = V_deal + V_draw / n
//
// Every quantity is an exact Rational end to end.

#include "nplay/cards.hpp"
#include "nplay/eval.hpp"
#include "nplay/paytable.hpp"
#include "nplay/stats.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nplay {

/// Bit i keeps hand[i] with the hand indexed in ascending card-id order.
/// Strategy ties resolve to the numerically smallest mask.
using HoldMask = std::uint8_t;
inline constexpr int kNumHoldMasks = 32;

struct EquivalenceClass {
    std::array<Card, 5> canonical_hand;
    std::uint32_t weight = 0;  // raw deals represented by this class
};

struct HoldAnalysis {
    HoldMask mask = 0;
    Rational cond_mean;  // E[payout | dealt hand, mask]
    Rational cond_var;   // Var(payout | dealt hand, mask)
};

struct VarianceDecomposition {
    Rational e_r1;
    Rational var_r1;
    Rational v_deal;  // variance of the conditional mean across deals
    Rational v_draw;  // mean of the conditional variance across deals
    std::string strategy_label;
    std::size_t class_count = 0;
    std::size_t distinct_cond_mean_count = 0;
};

struct NPlayRow {
    unsigned n = 1;
    SummaryStats stats;
};

/// Canonical representative: the lexicographically smallest image of the
/// hand under the 24 suit permutations. In the deuces variant the deuces
/// are wild and suit-less, so the permutations act on the non-deuce cards
/// only and the representative carries the lowest deuce ids.
EquivalenceClass canonicalize(const std::array<Card, 5>& hand, PayVariant variant);

/// All classes in ascending canonical-hand order; weights sum to C(52,5).
std::vector<EquivalenceClass> equivalence_classes(PayVariant variant);

/// Exact payout moments of one hold over all C(47, 5-k) completions.
HoldAnalysis hold_distribution(const std::array<Card, 5>& hand, HoldMask mask,
                               const PayTable& pay);

/// Best of the 32 holds: maximal cond_mean, ties by minimal cond_var, then
/// by smallest mask. Selection compares exact integers, never doubles.
HoldAnalysis optimal_hold(const std::array<Card, 5>& hand, const PayTable& pay);

struct AnalyzeOptions {
    /// Persist (or reuse) per-class strategy results in this text file.
    std::optional<std::string> cache_path;
    int workers = 0;  // 0 = hardware concurrency
};

/// Full-game law of total variance under the optimal strategy.
VarianceDecomposition analyze_game(const PayTable& pay, const AnalyzeOptions& opts = {});

/// Per-n rows for the n-play machine. The four algebraically equivalent
/// variance forms are evaluated independently and must agree exactly.
std::vector<NPlayRow> nplay_table(const VarianceDecomposition& decomp,
                                  const std::vector<unsigned>& ns);

/// Var(R1) + (n-1) V_deal: the variance of the total return per unit bet,
/// which grows with n. This is not the variance of the per-play average;
/// it is exposed because the two are easy to confuse.
Rational per_unit_bet_variance(const VarianceDecomposition& decomp, unsigned n);

/// Toy game on the first `ranks` ranks crossed with the first `suits` suits,
/// small enough to enumerate deals and draw pairs outright.
struct ReducedDeckSpec {
    int ranks = 3;
    int suits = 4;
};

/// Returns (Cov(R1,R2) by literal double-draw enumeration, V_deal by the
/// decomposition route) for the reduced game. The two are one identity:
/// with draws conditionally independent given the deal, the covariance
/// between plays is exactly the variance explained by the deal.
std::pair<Rational, Rational> covariance_identity_check(const PayTable& pay,
                                                        const ReducedDeckSpec& deck);

}  // namespace nplay
