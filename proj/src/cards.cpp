#include "nplay/cards.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nplay {

Card Card::parse(std::string_view text) {
    if (text.size() != 2)
        throw std::invalid_argument("card: expected two characters, got '" + std::string(text) + "'");
    char rc = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    char sc = static_cast<char>(std::tolower(static_cast<unsigned char>(text[1])));
    int rank = -1, suit = -1;
    for (int i = 0; i < 13; ++i)
        if (kRankChars[i] == rc) rank = i;
    for (int i = 0; i < 4; ++i)
        if (kSuitChars[i] == sc) suit = i;
    if (rank < 0 || suit < 0)
        throw std::invalid_argument("card: cannot parse '" + std::string(text) + "'");
    return Card(rank, suit);
}

std::string Card::str() const {
    std::string s(2, '?');
    s[0] = kRankChars[rank()];
    s[1] = kSuitChars[suit()];
    return s;
}

CardSet CardSet::parse(std::string_view text) {
    CardSet set;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        Card c = Card::parse(tok);
        if (set.contains(c)) throw std::domain_error("card set: duplicate card " + c.str());
        set.add(c);
    }
    return set;
}

std::vector<Card> CardSet::cards() const {
    std::vector<Card> out;
    out.reserve(size());
    std::uint64_t b = bits_;
    while (b) {
        out.push_back(Card(__builtin_ctzll(b)));
        b &= b - 1;
    }
    return out;
}

std::string CardSet::str() const {
    std::string out;
    for (Card c : cards()) {
        if (!out.empty()) out += ' ';
        out += c.str();
    }
    return out;
}

}  // namespace nplay
