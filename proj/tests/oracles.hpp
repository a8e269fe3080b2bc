#pragma once

// Independent reference implementations used only by tests.  These trade
// speed for obviousness and deliberately avoid the library's algorithms:
// hand strength as plain sorted tuples, wild-card evaluation by literal
// substitution over the whole deck.

#include "nplay/cards.hpp"
#include "nplay/eval.hpp"

#include <array>
#include <vector>

namespace nplay::oracle {

/// Lexicographically comparable description of a 5-card hand; two hands
/// compare the same way their real poker strengths do.
std::vector<int> hand_tuple(const std::array<Card, 5>& hand);

/// Best deuces-wild pay category by substituting every deuce with every
/// possible card (multisets over the full deck, so five of a kind arises).
/// Zero-pay outcomes collapse to HandCategory::nothing.
HandCategory deuces_best_by_substitution(const std::array<Card, 5>& hand);

}  // namespace nplay::oracle
