#pragma once

// Card model and deck bookkeeping.
//
// A card is a single byte: rank * 4 + suit, with rank 0 = deuce .. 12 = ace
// and suit order club, diamond, heart, spade.  The numeric id fixes the
// canonical total order used everywhere (iteration, serialization, reports).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace nplay {

inline constexpr int kDeckSize = 52;
inline constexpr char kRankChars[] = "23456789TJQKA";
inline constexpr char kSuitChars[] = "cdhs";

struct Card {
    std::uint8_t id = 0;

    constexpr Card() = default;
    constexpr explicit Card(int id_) : id(static_cast<std::uint8_t>(id_)) {}
    constexpr Card(int rank, int suit) : id(static_cast<std::uint8_t>(rank * 4 + suit)) {}

    constexpr int rank() const { return id >> 2; }
    constexpr int suit() const { return id & 3; }

    /// Two characters, e.g. "Ts" or "Kh"; case-insensitive.
    static Card parse(std::string_view text);
    std::string str() const;

    friend auto operator<=>(const Card&, const Card&) = default;
};

/// Set of cards as a 52-bit mask; iteration yields ascending ids.
class CardSet {
public:
    constexpr CardSet() = default;
    constexpr explicit CardSet(std::uint64_t bits) : bits_(bits) {}
    CardSet(std::initializer_list<Card> cards) {
        for (Card c : cards) add(c);
    }

    static constexpr CardSet full_deck() { return CardSet((std::uint64_t(1) << kDeckSize) - 1); }

    /// Space-separated card list; rejects duplicates.
    static CardSet parse(std::string_view text);

    constexpr bool contains(Card c) const { return (bits_ >> c.id) & 1; }
    constexpr void add(Card c) { bits_ |= std::uint64_t(1) << c.id; }
    constexpr void remove(Card c) { bits_ &= ~(std::uint64_t(1) << c.id); }
    constexpr int size() const { return __builtin_popcountll(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    constexpr CardSet complement() const { return CardSet(full_deck().bits_ & ~bits_); }

    constexpr CardSet operator|(CardSet o) const { return CardSet(bits_ | o.bits_); }
    constexpr CardSet operator&(CardSet o) const { return CardSet(bits_ & o.bits_); }
    constexpr CardSet operator-(CardSet o) const { return CardSet(bits_ & ~o.bits_); }
    friend constexpr bool operator==(CardSet, CardSet) = default;

    std::vector<Card> cards() const;
    std::string str() const;

private:
    std::uint64_t bits_ = 0;
};

}  // namespace nplay
