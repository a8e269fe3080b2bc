#pragma once

// Hand evaluators: 7-card showdown strength for hold'em, 5-card category
// classification for video poker (standard and deuces-wild).

#include "nplay/cards.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace nplay {

/// Video poker categories across both variants, strongest first.
/// Standard hands never produce the wild-only entries and deuces-wild
/// pay tables assign zero to two_pairs / jacks_or_better.
enum class HandCategory : std::uint8_t {
    natural_royal_flush = 0,
    four_deuces,
    wild_royal_flush,
    five_of_a_kind,
    straight_flush,
    four_of_a_kind,
    full_house,
    flush,
    straight,
    three_of_a_kind,
    two_pairs,
    jacks_or_better,
    nothing,
};

inline constexpr int kNumCategories = 13;

std::string_view category_name(HandCategory c);
HandCategory category_from_name(std::string_view name);

/// Totally ordered 7-card hand strength; equal values tie at showdown.
struct ShowdownRank {
    std::uint32_t value = 0;
    friend auto operator<=>(const ShowdownRank&, const ShowdownRank&) = default;
};

enum class ShowdownResult : std::uint8_t { a_wins, tie, b_wins };

/// Strength of exactly five distinct cards, comparable across hands.
std::uint32_t rank5_ids(const std::uint8_t* ids);

/// Best 5-of-7 strength; ids must be distinct.
ShowdownRank rank7_ids(const std::uint8_t* ids);

ShowdownRank rank7(const std::array<Card, 2>& hole, const std::array<Card, 5>& board);

/// Compares best-5-of-7 hands; throws std::domain_error on duplicate cards.
ShowdownResult showdown(const std::array<Card, 2>& hole_a, const std::array<Card, 2>& hole_b,
                        const std::array<Card, 5>& board);

HandCategory classify_standard_ids(const std::uint8_t* ids);
HandCategory classify_deuces_ids(const std::uint8_t* ids);

HandCategory classify_standard(const std::array<Card, 5>& hand);
HandCategory classify_deuces(const std::array<Card, 5>& hand);

}  // namespace nplay
