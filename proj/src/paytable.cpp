#include "nplay/paytable.hpp"

#include <sstream>
#include <stdexcept>

namespace nplay {

namespace {

constexpr std::uint64_t kMaxScaledPayout = 1'000'000;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view pay_variant_name(PayVariant v) {
    return v == PayVariant::standard ? "standard" : "deuces-wild";
}

PayVariant pay_variant_from_name(std::string_view name) {
    if (name == "standard") return PayVariant::standard;
    if (name == "deuces-wild") return PayVariant::deuces_wild;
    throw std::domain_error("unknown pay variant: " + std::string(name));
}

unsigned long PayTable::scale() const {
    mpz_class l(1);
    for (const Rational& p : payout) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.den().get_mpz_t());
    if (!l.fits_ulong_p()) throw std::domain_error("pay table denominators overflow the scale");
    return l.get_ui();
}

std::array<std::uint64_t, kNumCategories> PayTable::scaled_payouts() const {
    validate();
    mpz_class l(static_cast<unsigned long>(scale()));
    std::array<std::uint64_t, kNumCategories> w{};
    for (int c = 0; c < kNumCategories; ++c) {
        mpz_class n = payout[c].num() * l / payout[c].den();
        w[c] = n.get_ui();
    }
    return w;
}

void PayTable::validate() const {
    for (int c = 0; c < kNumCategories; ++c)
        if (payout[c].sign() < 0)
            throw std::domain_error("negative payout for " +
                                    std::string(category_name(static_cast<HandCategory>(c))));
    mpz_class l(static_cast<unsigned long>(scale()));
    for (const Rational& p : payout) {
        mpz_class scaled = p.num() * l / p.den();
        if (scaled > kMaxScaledPayout)
            throw std::domain_error("scaled payout exceeds 10^6; table too fine for exact engine");
    }
}

std::uint64_t PayTable::fingerprint() const {
    std::string body = "variant: " + std::string(pay_variant_name(variant)) + "\n";
    for (int c = 0; c < kNumCategories; ++c)
        if (!payout[c].is_zero())
            body += std::string(category_name(static_cast<HandCategory>(c))) + ": " +
                    payout[c].compact_str() + "\n";
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : body) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string PayTable::serialize() const {
    std::string out;
    if (!name.empty()) out += "name: " + name + "\n";
    out += "variant: " + std::string(pay_variant_name(variant)) + "\n";
    for (int c = 0; c < kNumCategories; ++c)
        if (!payout[c].is_zero())
            out += std::string(category_name(static_cast<HandCategory>(c))) + ": " +
                   payout[c].compact_str() + "\n";
    return out;
}

PayTable PayTable::parse(const std::string& text) {
    PayTable t;
    bool saw_variant = false;
    std::array<bool, kNumCategories> seen{};
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw std::domain_error("pay table line missing ':': " + std::string(line));
        std::string_view key = trim(line.substr(0, colon));
        std::string_view value = trim(line.substr(colon + 1));
        if (key == "name") {
            t.name = std::string(value);
        } else if (key == "variant") {
            t.variant = pay_variant_from_name(value);
            saw_variant = true;
        } else {
            // Bad names or values in a config file are data errors, not
            // caller bugs; normalize the exception type accordingly.
            try {
                HandCategory c = category_from_name(key);
                int ci = static_cast<int>(c);
                if (seen[ci])
                    throw std::domain_error("duplicate pay table entry: " + std::string(key));
                seen[ci] = true;
                t.payout[ci] = Rational::parse(value);
            } catch (const std::invalid_argument& e) {
                throw std::domain_error(e.what());
            }
        }
    }
    if (!saw_variant) throw std::domain_error("pay table missing 'variant:' line");
    t.validate();
    return t;
}

PayTable PayTable::preset(const std::string& preset_name) {
    auto set = [](PayTable& t, HandCategory c, long v) {
        t.payout[static_cast<int>(c)] = Rational(v);
    };
    if (preset_name == "jacks-or-better-9-6") {
        PayTable t;
        t.variant = PayVariant::standard;
        t.name = preset_name;
        set(t, HandCategory::natural_royal_flush, 800);
        set(t, HandCategory::straight_flush, 50);
        set(t, HandCategory::four_of_a_kind, 25);
        set(t, HandCategory::full_house, 9);
        set(t, HandCategory::flush, 6);
        set(t, HandCategory::straight, 4);
        set(t, HandCategory::three_of_a_kind, 3);
        set(t, HandCategory::two_pairs, 2);
        set(t, HandCategory::jacks_or_better, 1);
        return t;
    }
    if (preset_name == "deuces-wild-full-pay") {
        PayTable t;
        t.variant = PayVariant::deuces_wild;
        t.name = preset_name;
        set(t, HandCategory::natural_royal_flush, 800);
        set(t, HandCategory::four_deuces, 200);
        set(t, HandCategory::wild_royal_flush, 25);
        set(t, HandCategory::five_of_a_kind, 15);
        set(t, HandCategory::straight_flush, 9);
        set(t, HandCategory::four_of_a_kind, 5);
        set(t, HandCategory::full_house, 3);
        set(t, HandCategory::flush, 2);
        set(t, HandCategory::straight, 2);
        set(t, HandCategory::three_of_a_kind, 1);
        return t;
    }
    throw std::invalid_argument("unknown pay table preset: " + preset_name);
}

}  // namespace nplay
