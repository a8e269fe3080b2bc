#include "doctest.h"

#include "nplay/cards.hpp"
#include "nplay/eval.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>

using namespace nplay;

namespace {

std::array<Card, 5> hand5(const char* text) {
    auto cards = CardSet::parse(text).cards();
    REQUIRE(cards.size() == 5);
    std::array<Card, 5> h;
    std::copy(cards.begin(), cards.end(), h.begin());
    return h;
}

std::array<Card, 2> hand2(const char* a, const char* b) {
    return {Card::parse(a), Card::parse(b)};
}

// Deuces pay buckets: zero-pay categories are indistinguishable to the game.
HandCategory pay_bucket(HandCategory c) {
    if (c == HandCategory::two_pairs || c == HandCategory::jacks_or_better)
        return HandCategory::nothing;
    return c;
}

}  // namespace

TEST_CASE("card parse and format") {
    CHECK(Card::parse("Ts").str() == "Ts");
    CHECK(Card::parse("ts") == Card::parse("TS"));
    CHECK(Card::parse("2c").id == 0);
    CHECK(Card::parse("As").id == 51);
    CHECK(Card::parse("Kh").rank() == 11);
    CHECK(Card::parse("Kh").suit() == 2);
    CHECK_THROWS_AS(Card::parse("1s"), std::invalid_argument);
    CHECK_THROWS_AS(Card::parse("Tx"), std::invalid_argument);
    CHECK_THROWS_AS(Card::parse("T"), std::invalid_argument);
    CHECK_THROWS_AS(Card::parse("10s"), std::invalid_argument);
    for (int id = 0; id < kDeckSize; ++id)
        CHECK(Card::parse(Card(id).str()).id == id);
}

TEST_CASE("card set basics") {
    CardSet s = CardSet::parse("Ks Qs Js 7d 2c");
    CHECK(s.size() == 5);
    CHECK(s.contains(Card::parse("7d")));
    CHECK(!s.contains(Card::parse("7c")));
    CHECK(s.complement().size() == 47);
    CHECK((s | s.complement()) == CardSet::full_deck());
    CHECK((s & s.complement()).empty());
    // Canonical order is ascending id regardless of input order.
    CHECK(s.str() == "2c 7d Js Qs Ks");
    CHECK(CardSet::parse(s.str()) == s);
    CHECK_THROWS_AS(CardSet::parse("As As"), std::domain_error);
    CHECK(CardSet::parse("").empty());
}

TEST_CASE("hand category names round trip") {
    for (int i = 0; i < kNumCategories; ++i) {
        auto c = static_cast<HandCategory>(i);
        CHECK(category_from_name(category_name(c)) == c);
    }
    CHECK_THROWS_AS(category_from_name("royal"), std::invalid_argument);
}

TEST_CASE("showdown worked examples") {
    auto board1 = hand5("Ks Qs Js 7d 2c");
    CHECK(showdown(hand2("Ts", "Tc"), hand2("Kh", "Kd"), board1) == ShowdownResult::b_wins);
    auto board2 = hand5("Ks Qh 7d 4c 9h");
    CHECK(showdown(hand2("Ad", "Ac"), hand2("As", "Ah"), board2) == ShowdownResult::tie);
    auto board3 = hand5("Ks Qs Js 7d 9s");
    CHECK(showdown(hand2("Ts", "Tc"), hand2("Kh", "Kd"), board3) == ShowdownResult::a_wins);
    CHECK_THROWS_AS(showdown(hand2("Ts", "Tc"), hand2("Ts", "Kd"), board1), std::domain_error);
    CHECK_THROWS_AS(showdown(hand2("Ks", "Tc"), hand2("Ah", "Kd"), board1), std::domain_error);
}

TEST_CASE("showdown antisymmetry and suit permutation invariance") {
    std::mt19937_64 gen(7);
    std::array<int, 52> deck;
    for (int i = 0; i < 52; ++i) deck[i] = i;
    // All 24 permutations of the four suits.
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::vector<std::array<int, 4>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    for (int trial = 0; trial < 2000; ++trial) {
        std::shuffle(deck.begin(), deck.end(), gen);
        std::array<Card, 2> a = {Card(deck[0]), Card(deck[1])};
        std::array<Card, 2> b = {Card(deck[2]), Card(deck[3])};
        std::array<Card, 5> board = {Card(deck[4]), Card(deck[5]), Card(deck[6]), Card(deck[7]),
                                     Card(deck[8])};
        ShowdownResult fwd = showdown(a, b, board);
        ShowdownResult rev = showdown(b, a, board);
        if (fwd == ShowdownResult::a_wins) CHECK(rev == ShowdownResult::b_wins);
        if (fwd == ShowdownResult::b_wins) CHECK(rev == ShowdownResult::a_wins);
        if (fwd == ShowdownResult::tie) CHECK(rev == ShowdownResult::tie);

        const auto& p = perms[gen() % perms.size()];
        auto mapc = [&](Card c) { return Card(c.rank(), p[c.suit()]); };
        std::array<Card, 2> a2 = {mapc(a[0]), mapc(a[1])};
        std::array<Card, 2> b2 = {mapc(b[0]), mapc(b[1])};
        std::array<Card, 5> board2;
        std::array<Card, 5> hand = {Card(deck[0]), Card(deck[1]), Card(deck[2]), Card(deck[3]),
                                    Card(deck[4])};
        std::array<Card, 5> hand_p;
        for (int i = 0; i < 5; ++i) {
            board2[i] = mapc(board[i]);
            hand_p[i] = mapc(hand[i]);
        }
        CHECK(showdown(a2, b2, board2) == fwd);
        CHECK(classify_standard(hand_p) == classify_standard(hand));
        CHECK(classify_deuces(hand_p) == classify_deuces(hand));
    }
}

TEST_CASE("five card strength ordering matches the tuple oracle") {
    std::mt19937_64 gen(11);
    std::array<int, 52> deck;
    for (int i = 0; i < 52; ++i) deck[i] = i;
    auto draw = [&] {
        std::shuffle(deck.begin(), deck.end(), gen);
        return std::array<Card, 5>{Card(deck[0]), Card(deck[1]), Card(deck[2]), Card(deck[3]),
                                   Card(deck[4])};
    };
    for (int trial = 0; trial < 60000; ++trial) {
        auto h1 = draw(), h2 = draw();
        std::uint8_t i1[5], i2[5];
        for (int i = 0; i < 5; ++i) {
            i1[i] = h1[i].id;
            i2[i] = h2[i].id;
        }
        auto t1 = oracle::hand_tuple(h1), t2 = oracle::hand_tuple(h2);
        std::uint32_t r1 = rank5_ids(i1), r2 = rank5_ids(i2);
        CHECK((r1 < r2) == (t1 < t2));
        CHECK((r1 == r2) == (t1 == t2));
    }
}

TEST_CASE("five card strength ordering edges") {
    auto r = [](const char* text) {
        auto h = hand5(text);
        std::uint8_t ids[5];
        for (int i = 0; i < 5; ++i) ids[i] = h[i].id;
        return rank5_ids(ids);
    };
    // Wheel is the weakest straight and the ace does not wrap around.
    CHECK(r("Ah 2c 3d 4s 5h") < r("2h 3c 4d 5s 6h"));
    CHECK(r("Jh Qc Kd As 2h") < r("Ah 2c 3d 4s 5h"));
    CHECK(r("Ah 2h 3h 4h 5h") < r("2s 3s 4s 5s 6s"));
    CHECK(r("Th Jh Qh Kh Ah") > r("9h Th Jh Qh Kh"));
    // Kickers and group ranks decide within a category.
    CHECK(r("Ac Ad Ah As 2c") > r("Kc Kd Kh Ks Qc"));
    CHECK(r("2c 2d 2h 2s Ac") < r("3c 3d 3h 3s 2c"));
    CHECK(r("Ac Ad 2h 2s Kc") > r("Kd Kh Qc Qd Ac"));
    CHECK(r("Ac Ad 2h 2s 5c") < r("Ah As 3c 3d 4h"));
    CHECK(r("Ac Kc Qc Jc 9c") > r("Ad Kd Qd Jd 8d"));
    CHECK(r("2c 2d 3h 3s 4c") == r("2h 2s 3c 3d 4s"));
    CHECK(r("Ac Ad Kh Qs Jc") > r("Ah As Kc Qd Tc"));
}

TEST_CASE("seven card strength matches maximum tuple over subsets") {
    std::mt19937_64 gen(13);
    std::array<int, 52> deck;
    for (int i = 0; i < 52; ++i) deck[i] = i;
    auto best_tuple = [](const std::array<Card, 7>& h) {
        std::vector<int> best;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) {
                std::array<Card, 5> five;
                int n = 0;
                for (int k = 0; k < 7; ++k)
                    if (k != i && k != j) five[n++] = h[k];
                auto t = oracle::hand_tuple(five);
                if (best.empty() || t > best) best = t;
            }
        return best;
    };
    std::vector<int> prev_tuple;
    ShowdownRank prev_rank{};
    for (int trial = 0; trial < 4000; ++trial) {
        std::shuffle(deck.begin(), deck.end(), gen);
        std::array<Card, 7> h;
        std::uint8_t ids[7];
        for (int i = 0; i < 7; ++i) {
            h[i] = Card(deck[i]);
            ids[i] = h[i].id;
        }
        auto t = best_tuple(h);
        ShowdownRank rk = rank7_ids(ids);
        if (trial > 0) {
            CHECK((rk < prev_rank) == (t < prev_tuple));
            CHECK((rk == prev_rank) == (t == prev_tuple));
        }
        prev_tuple = t;
        prev_rank = rk;
    }
}

TEST_CASE("standard classification census over all hands") {
    std::array<long, kNumCategories> census{};
    std::uint8_t ids[5];
    for (int a = 0; a < 48; ++a)
        for (int b = a + 1; b < 49; ++b)
            for (int c = b + 1; c < 50; ++c)
                for (int d = c + 1; d < 51; ++d)
                    for (int e = d + 1; e < 52; ++e) {
                        ids[0] = a; ids[1] = b; ids[2] = c; ids[3] = d; ids[4] = e;
                        ++census[static_cast<int>(classify_standard_ids(ids))];
                    }
    CHECK(census[static_cast<int>(HandCategory::natural_royal_flush)] == 4);
    CHECK(census[static_cast<int>(HandCategory::straight_flush)] == 36);
    CHECK(census[static_cast<int>(HandCategory::four_of_a_kind)] == 624);
    CHECK(census[static_cast<int>(HandCategory::full_house)] == 3744);
    CHECK(census[static_cast<int>(HandCategory::flush)] == 5108);
    CHECK(census[static_cast<int>(HandCategory::straight)] == 10200);
    CHECK(census[static_cast<int>(HandCategory::three_of_a_kind)] == 54912);
    CHECK(census[static_cast<int>(HandCategory::two_pairs)] == 123552);
    CHECK(census[static_cast<int>(HandCategory::jacks_or_better)] == 337920);
    CHECK(census[static_cast<int>(HandCategory::nothing)] == 2062860);
    CHECK(census[static_cast<int>(HandCategory::four_deuces)] == 0);
    CHECK(census[static_cast<int>(HandCategory::wild_royal_flush)] == 0);
    CHECK(census[static_cast<int>(HandCategory::five_of_a_kind)] == 0);
}

TEST_CASE("deuces classification worked examples") {
    CHECK(classify_deuces(hand5("2c 2d 2h 2s Ac")) == HandCategory::four_deuces);
    CHECK(classify_deuces(hand5("2c Ks Qs Js Ts")) == HandCategory::wild_royal_flush);
    CHECK(classify_deuces(hand5("3c 4d 5h 6s 8c")) == HandCategory::nothing);
    CHECK(classify_deuces(hand5("Th Jh Qh Kh Ah")) == HandCategory::natural_royal_flush);
    CHECK(classify_deuces(hand5("2c 2d Ah As Ac")) == HandCategory::five_of_a_kind);
    CHECK(classify_deuces(hand5("2c Ah 3h 4h 5h")) == HandCategory::straight_flush);
    CHECK(classify_deuces(hand5("2c 2d 9h 9s Kc")) == HandCategory::four_of_a_kind);
    CHECK(classify_deuces(hand5("2c 9d 9h Ks Kc")) == HandCategory::full_house);
    CHECK(classify_deuces(hand5("2c 3h 7h 9h Kh")) == HandCategory::flush);
    CHECK(classify_deuces(hand5("2c Ah 3s 4d 5h")) == HandCategory::straight);
    CHECK(classify_deuces(hand5("2c 3h 4s 5d 6h")) == HandCategory::straight);
    CHECK(classify_deuces(hand5("2c Ah 3s 4d 6h")) == HandCategory::nothing);
    CHECK(classify_deuces(hand5("2c 2d Ah 3s 7d")) == HandCategory::three_of_a_kind);
    CHECK(classify_deuces(hand5("2c Kh Ks 7d 8c")) == HandCategory::three_of_a_kind);
    CHECK(classify_deuces(hand5("Jc Jd 3h 7s 9c")) == HandCategory::jacks_or_better);
}

TEST_CASE("deuces classification census over all hands") {
    std::array<long, kNumCategories> census{};
    std::uint8_t ids[5];
    for (int a = 0; a < 48; ++a)
        for (int b = a + 1; b < 49; ++b)
            for (int c = b + 1; c < 50; ++c)
                for (int d = c + 1; d < 51; ++d)
                    for (int e = d + 1; e < 52; ++e) {
                        ids[0] = a; ids[1] = b; ids[2] = c; ids[3] = d; ids[4] = e;
                        ++census[static_cast<int>(pay_bucket(classify_deuces_ids(ids)))];
                    }
    CHECK(census[static_cast<int>(HandCategory::natural_royal_flush)] == 4);
    CHECK(census[static_cast<int>(HandCategory::four_deuces)] == 48);
    CHECK(census[static_cast<int>(HandCategory::wild_royal_flush)] == 480);
    CHECK(census[static_cast<int>(HandCategory::five_of_a_kind)] == 624);
    CHECK(census[static_cast<int>(HandCategory::straight_flush)] == 2068);
    CHECK(census[static_cast<int>(HandCategory::four_of_a_kind)] == 31552);
    CHECK(census[static_cast<int>(HandCategory::full_house)] == 12672);
    CHECK(census[static_cast<int>(HandCategory::flush)] == 14472);
    CHECK(census[static_cast<int>(HandCategory::straight)] == 62232);
    CHECK(census[static_cast<int>(HandCategory::three_of_a_kind)] == 355080);
    CHECK(census[static_cast<int>(HandCategory::nothing)] == 2119728);
}

TEST_CASE("deuces classification agrees with substitution oracle on a sample") {
    // Stride per deuce count keeps the literal 52^d substitution affordable.
    const int stride[5] = {500, 100, 10, 5, 1};
    long seen[5] = {}, checked[5] = {};
    std::uint8_t ids[5];
    for (int a = 0; a < 48; ++a)
        for (int b = a + 1; b < 49; ++b)
            for (int c = b + 1; c < 50; ++c)
                for (int d = c + 1; d < 51; ++d)
                    for (int e = d + 1; e < 52; ++e) {
                        // Deuces occupy ids 0..3, a prefix of the sorted hand.
                        int nd = (a < 4) + (b < 4) + (c < 4) + (d < 4) + (e < 4);
                        if (seen[nd]++ % stride[nd] != 0) continue;
                        ++checked[nd];
                        ids[0] = a; ids[1] = b; ids[2] = c; ids[3] = d; ids[4] = e;
                        std::array<Card, 5> h = {Card(a), Card(b), Card(c), Card(d), Card(e)};
                        HandCategory got = pay_bucket(classify_deuces_ids(ids));
                        HandCategory want = oracle::deuces_best_by_substitution(h);
                        REQUIRE(got == want);
                    }
    for (int d = 0; d <= 4; ++d) CHECK(checked[d] > 0);
}
