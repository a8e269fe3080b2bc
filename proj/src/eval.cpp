#include "nplay/eval.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nplay {

namespace {

constexpr std::string_view kCategoryNames[kNumCategories] = {
    "natural-royal-flush", "four-deuces", "wild-royal-flush", "five-of-a-kind",
    "straight-flush",      "four-of-a-kind", "full-house",    "flush",
    "straight",            "three-of-a-kind", "two-pairs",    "jacks-or-better",
    "nothing",
};

// Strength categories for 5-card poker comparison, weakest first.
enum Strength : std::uint32_t {
    kHigh = 0,
    kPair,
    kTwoPair,
    kTrips,
    kStraight,
    kFlush,
    kFullHouse,
    kQuads,
    kStraightFlush,
};

// High rank of the straight formed by a 5-bit rank mask, or -1.
// The ace plays low in the wheel, whose high card is the five (rank 3).
int straight_high(unsigned mask) {
    for (int high = 12; high >= 4; --high) {
        unsigned run = 0x1Fu << (high - 4);
        if ((mask & run) == run) return high;
    }
    if ((mask & 0x100Fu) == 0x100Fu) return 3;
    return -1;
}

}  // namespace

std::string_view category_name(HandCategory c) {
    return kCategoryNames[static_cast<int>(c)];
}

HandCategory category_from_name(std::string_view name) {
    for (int i = 0; i < kNumCategories; ++i)
        if (kCategoryNames[i] == name) return static_cast<HandCategory>(i);
    throw std::invalid_argument("unknown hand category '" + std::string(name) + "'");
}

std::uint32_t rank5_ids(const std::uint8_t* ids) {
    std::uint8_t cnt[13] = {};
    unsigned mask = 0;
    bool flush = true;
    for (int i = 0; i < 5; ++i) {
        int r = ids[i] >> 2;
        ++cnt[r];
        mask |= 1u << r;
        if ((ids[i] & 3) != (ids[0] & 3)) flush = false;
    }
    int quad = -1, trip = -1, pair_hi = -1, pair_lo = -1;
    for (int r = 12; r >= 0; --r) {
        if (cnt[r] == 4) quad = r;
        else if (cnt[r] == 3) trip = r;
        else if (cnt[r] == 2) (pair_hi < 0 ? pair_hi : pair_lo) = r;
    }
    auto singles_desc = [&](int n) {
        std::uint32_t k = 0;
        for (int r = 12; r >= 0 && n > 0; --r)
            if (cnt[r] == 1) {
                k = (k << 4) | static_cast<std::uint32_t>(r);
                --n;
            }
        return k;
    };
    auto pack = [](Strength s, std::uint32_t tie) { return (static_cast<std::uint32_t>(s) << 20) | tie; };

    int sh = straight_high(mask);
    if (flush && sh >= 0) return pack(kStraightFlush, static_cast<std::uint32_t>(sh));
    if (quad >= 0) return pack(kQuads, (static_cast<std::uint32_t>(quad) << 4) | singles_desc(1));
    if (trip >= 0 && pair_hi >= 0)
        return pack(kFullHouse, (static_cast<std::uint32_t>(trip) << 4) | static_cast<std::uint32_t>(pair_hi));
    if (flush) return pack(kFlush, singles_desc(5));
    if (sh >= 0) return pack(kStraight, static_cast<std::uint32_t>(sh));
    if (trip >= 0) return pack(kTrips, (static_cast<std::uint32_t>(trip) << 8) | singles_desc(2));
    if (pair_lo >= 0)
        return pack(kTwoPair, (static_cast<std::uint32_t>(pair_hi) << 8) |
                                  (static_cast<std::uint32_t>(pair_lo) << 4) | singles_desc(1));
    if (pair_hi >= 0) return pack(kPair, (static_cast<std::uint32_t>(pair_hi) << 12) | singles_desc(3));
    return pack(kHigh, singles_desc(5));
}

ShowdownRank rank7_ids(const std::uint8_t* ids) {
    std::uint32_t best = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            std::uint8_t five[5];
            int n = 0;
            for (int k = 0; k < 7; ++k)
                if (k != i && k != j) five[n++] = ids[k];
            best = std::max(best, rank5_ids(five));
        }
    return ShowdownRank{best};
}

ShowdownRank rank7(const std::array<Card, 2>& hole, const std::array<Card, 5>& board) {
    std::uint8_t ids[7] = {hole[0].id, hole[1].id, board[0].id, board[1].id,
                           board[2].id, board[3].id, board[4].id};
    return rank7_ids(ids);
}

ShowdownResult showdown(const std::array<Card, 2>& hole_a, const std::array<Card, 2>& hole_b,
                        const std::array<Card, 5>& board) {
    CardSet seen;
    for (Card c : hole_a) seen.add(c);
    for (Card c : hole_b) seen.add(c);
    for (Card c : board) seen.add(c);
    if (seen.size() != 9) throw std::domain_error("showdown: duplicate cards");
    ShowdownRank a = rank7(hole_a, board);
    ShowdownRank b = rank7(hole_b, board);
    if (a > b) return ShowdownResult::a_wins;
    if (b > a) return ShowdownResult::b_wins;
    return ShowdownResult::tie;
}

HandCategory classify_standard_ids(const std::uint8_t* ids) {
    std::uint32_t s = rank5_ids(ids);
    switch (static_cast<Strength>(s >> 20)) {
        case kStraightFlush:
            return (s & 0xF) == 12 ? HandCategory::natural_royal_flush : HandCategory::straight_flush;
        case kQuads: return HandCategory::four_of_a_kind;
        case kFullHouse: return HandCategory::full_house;
        case kFlush: return HandCategory::flush;
        case kStraight: return HandCategory::straight;
        case kTrips: return HandCategory::three_of_a_kind;
        case kTwoPair: return HandCategory::two_pairs;
        case kPair:
            // Jacks or better: pair rank at least the jack (rank 9).
            return ((s >> 12) & 0xF) >= 9 ? HandCategory::jacks_or_better : HandCategory::nothing;
        case kHigh: return HandCategory::nothing;
    }
    return HandCategory::nothing;
}

HandCategory classify_deuces_ids(const std::uint8_t* ids) {
    int d = 0;
    std::uint8_t nd[5];
    int n = 0;
    for (int i = 0; i < 5; ++i) {
        if ((ids[i] >> 2) == 0) ++d;
        else nd[n++] = ids[i];
    }
    if (d == 0) return classify_standard_ids(ids);
    if (d == 4) return HandCategory::four_deuces;

    std::uint8_t cnt[13] = {};
    bool same_suit = true;
    int min_rank = 13;
    for (int i = 0; i < n; ++i) {
        ++cnt[nd[i] >> 2];
        min_rank = std::min(min_rank, nd[i] >> 2);
        if ((nd[i] & 3) != (nd[0] & 3)) same_suit = false;
    }
    int c1 = 0, c2 = 0;
    for (int r = 1; r < 13; ++r) {
        if (cnt[r] >= c1) {
            c2 = c1;
            c1 = cnt[r];
        } else {
            c2 = std::max(c2, static_cast<int>(cnt[r]));
        }
    }
    bool distinct = (c1 <= 1);
    // A straight needs the distinct ranks to fit a 5-window; the ace may sit
    // below the deuce (A-2-3-4-5), so try it at value -1 as well as 12.
    bool window = false;
    if (distinct) {
        int lo = 13, hi = -2;
        bool ace = false;
        for (int i = 0; i < n; ++i) {
            int r = nd[i] >> 2;
            if (r == 12) ace = true;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        window = (hi - lo <= 4);
        if (!window && ace) {
            int lo2 = -1, hi2 = -1;
            for (int i = 0; i < n; ++i) {
                int r = nd[i] >> 2;
                if (r == 12) continue;
                hi2 = std::max(hi2, r);
            }
            window = (hi2 - lo2 <= 4);
        }
    }

    if (same_suit && distinct && min_rank >= 8) return HandCategory::wild_royal_flush;
    if (c1 + d >= 5) return HandCategory::five_of_a_kind;
    if (same_suit && distinct && window) return HandCategory::straight_flush;
    if (c1 + d >= 4) return HandCategory::four_of_a_kind;
    if (c1 + c2 + d >= 5) return HandCategory::full_house;
    if (same_suit) return HandCategory::flush;
    if (distinct && window) return HandCategory::straight;
    if (c1 + d >= 3) return HandCategory::three_of_a_kind;
    return HandCategory::nothing;
}

namespace {
std::array<std::uint8_t, 5> to_ids(const std::array<Card, 5>& hand) {
    return {hand[0].id, hand[1].id, hand[2].id, hand[3].id, hand[4].id};
}
}  // namespace

HandCategory classify_standard(const std::array<Card, 5>& hand) {
    return classify_standard_ids(to_ids(hand).data());
}

HandCategory classify_deuces(const std::array<Card, 5>& hand) {
    return classify_deuces_ids(to_ids(hand).data());
}

}  // namespace nplay
