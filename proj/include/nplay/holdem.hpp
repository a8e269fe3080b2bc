#pragma once

// "Run it n times": two players are all in and the remaining board is dealt
// n times without replacement; each run awards 1, 1/2, or 0 pot shares.
// The per-run returns are exchangeable, so every per-n row reduces to the
// single-run mean, the single-run variance, and the pairwise covariance.
//
// Exact engines per street:
//   4-card board  -> hypergeometric closed form over river outs (with ties),
//   3-card board  -> full enumeration of (turn, river) pairs and of ordered
//                    pairs of disjoint two-card runs,
//   empty board   -> suit-composition analysis when both players hold the
//                    same pocket pair; seeded Monte Carlo otherwise.

#include "nplay/cards.hpp"
#include "nplay/rational.hpp"
#include "nplay/stats.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace nplay {

enum class Seat : std::uint8_t { hero, villain };

struct AllInState {
    std::array<Card, 2> hero;
    std::array<Card, 2> villain;
    std::vector<Card> board;  // 0, 3, or 4 cards
    CardSet dead;             // exposed cards removed from the unseen set
    unsigned mucked_hands = 0;

    /// Throws std::domain_error on duplicate cards, a bad board size, or a
    /// muck count that leaves no room for a single run.
    void validate() const;

    CardSet seen() const;
    CardSet unseen() const { return seen().complement(); }
    int cards_to_come() const { return 5 - static_cast<int>(board.size()); }
};

struct OutsTies {
    int o = 0;       // unseen river cards that win for the player
    int t = 0;       // unseen river cards that tie
    int losses = 0;  // the rest
    int unseen() const { return o + t + losses; }
};

/// Exact joint law of (R1, R2) for two runs; index order R = 1, 1/2, 0.
struct RunOutcomeDistribution {
    std::array<Rational, 3> marginal;
    std::array<std::array<Rational, 3>, 3> joint;
    Rational e_r1;
    Rational var_r1;
    Rational cov_r12;

    /// Fills the moments from the tables and enforces the structural
    /// invariants: both tables sum to 1, the joint is symmetric, and each
    /// joint row sums to its marginal entry.
    void finalize();

    /// The same distribution seen from the other seat (win and loss swap).
    RunOutcomeDistribution flipped() const;
};

enum class RunMethod : std::uint8_t {
    closed_form,
    exact_enumeration,
    suit_composition,
    monte_carlo,
};

/// Method requested by the caller; auto_select picks per street.
enum class MethodChoice : std::uint8_t {
    auto_select,
    closed_form,
    exact_enumeration,
    suit_composition,
    monte_carlo,
};

std::string_view run_method_name(RunMethod m);

struct McParams {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    int workers = 0;  // 0 = hardware concurrency
};

struct McMeta {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    Rational mean_estimate;
    Rational var1_estimate;
    Rational cov_estimate;  // zero when n = 1 (no pairs to average)
    Rational mean_se2;      // squared standard error of mean_estimate
    Rational var1_se2;      // delta-method squared standard error
    double mean_ci_half_width = 0.0;  // 99% normal half-widths
    double var1_ci_half_width = 0.0;
};

/// 99% two-sided normal quantile used for Monte Carlo half-widths.
inline constexpr double kCiZ99 = 2.5758293035489004;

struct RunItNReport {
    unsigned n_max = 0;
    RunMethod method = RunMethod::closed_form;
    Rational mean;
    Rational var1;
    Rational cov12;
    std::vector<SummaryStats> rows;  // rows[i] holds stats for n = i + 1
    std::optional<McMeta> mc;
};

/// Largest legal n for the state's street, counting burn cards and mucked
/// hands: floor((base - (2m + 3)) / cards_to_come), base in {44, 45, 48}.
int plan_max_runs(const AllInState& state);

/// Classifies every unseen river card by showdown; board must have 4 cards.
OutsTies classify_river_outcomes(const AllInState& state, Seat player);

/// Exact stats for the mean of n one-card runs.  Without ties this is the
/// hypergeometric closed form with its finite-population correction; with
/// ties it goes through the single-run moments and the exchangeable-mean
/// identity.  Rejects n = 0 and n > unseen.
SummaryStats one_card_stats(const OutsTies& outs, unsigned n);

/// Single-run moments behind one_card_stats; exposed for reports.
struct OneCardMoments {
    Rational mean, var1, cov12;
};
OneCardMoments one_card_moments(const OutsTies& outs);

/// Exact (R1, R2) law by enumerating all unordered two-card completions and
/// all ordered pairs of disjoint completions; board must have 3 cards.
RunOutcomeDistribution two_card_joint(const AllInState& state, Seat player);

/// Exact (R1, R2) law from the hero's seat when both players hold pocket
/// pairs of the same rank and the board is empty: a player wins a run only
/// when the board carries 4+ cards of one of their suits, so the law depends
/// only on the board's suit composition.  Rejects other states, including
/// dead cards (the composition counts need the full 48-card residue).
RunOutcomeDistribution mirrored_pair_joint(const AllInState& state);

/// Seeded Monte Carlo over n disjoint 5-card boards per trial; empty board
/// only.  Bit-identical for a given (samples, seed) at any worker count.
RunItNReport five_card_monte_carlo(const AllInState& state, Seat player, unsigned n,
                                   std::uint64_t samples, std::uint64_t seed, int workers = 0);

/// Street dispatcher; mc supplies sample count and seed whenever the Monte
/// Carlo path is chosen (auto-selected on an empty board without mirrored
/// pairs, or forced on any street).
RunItNReport run_it_n_report(const AllInState& state, Seat player, unsigned n_max,
                             MethodChoice method = MethodChoice::auto_select,
                             const std::optional<McParams>& mc = std::nullopt);

}  // namespace nplay
