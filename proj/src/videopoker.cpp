#include "nplay/videopoker.hpp"

#include "nplay/combin.hpp"
#include "nplay/parallel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nplay {

namespace {

using u128 = unsigned __int128;
using Classifier = HandCategory (*)(const std::uint8_t*);

constexpr auto kChoose = [] {
    std::array<std::array<std::uint32_t, 6>, 53> c{};
    for (int n = 0; n < 53; ++n) {
        c[n][0] = 1;
        for (int k = 1; k < 6; ++k) c[n][k] = (n == 0) ? 0 : c[n - 1][k - 1] + c[n - 1][k];
    }
    return c;
}();

constexpr std::uint64_t kDeals = 2598960;  // C(52,5)

/// Common denominator for conditional means across all draw sizes:
/// lcm of C(47,r), r = 0..5. Means scale to integers <= 10^6 * this.
constexpr std::uint64_t kLambdaDraw = [] {
    std::uint64_t l = 1;
    for (int r = 0; r <= 5; ++r) l = std::lcm(l, std::uint64_t{kChoose[47][r]});
    return l;
}();

constexpr std::array<std::array<std::uint8_t, 4>, 24> kSuitPerms = [] {
    std::array<std::array<std::uint8_t, 4>, 24> out{};
    std::array<std::uint8_t, 4> p{0, 1, 2, 3};
    for (auto& row : out) {
        row = p;
        std::next_permutation(p.begin(), p.end());
    }
    return out;
}();

// Subsets of the deck of size 0..4, ranked colexicographically per size.
constexpr std::uint32_t kSubsetOffset[5] = {0, 1, 53, 1379, 23479};
constexpr std::uint32_t kNumSubsets = 294204;

Classifier classifier_for(PayVariant v) {
    return v == PayVariant::standard ? classify_standard_ids : classify_deuces_ids;
}

/// counts[s * 13 + c] = number of 5-card hands of category c containing
/// subset s, over the full deck. One pass over all C(52,5) hands.
struct DrawCensus {
    Classifier classify;
    std::vector<std::uint32_t> counts;
};

DrawCensus build_census(PayVariant v) {
    DrawCensus cz{classifier_for(v), std::vector<std::uint32_t>(kNumSubsets * 13, 0)};
    std::uint8_t h[5];
    for (int a = 0; a < 48; ++a) {
        h[0] = static_cast<std::uint8_t>(a);
        for (int b = a + 1; b < 49; ++b) {
            h[1] = static_cast<std::uint8_t>(b);
            for (int c = b + 1; c < 50; ++c) {
                h[2] = static_cast<std::uint8_t>(c);
                for (int d = c + 1; d < 51; ++d) {
                    h[3] = static_cast<std::uint8_t>(d);
                    for (int e = d + 1; e < 52; ++e) {
                        h[4] = static_cast<std::uint8_t>(e);
                        int cat = static_cast<int>(cz.classify(h));
                        for (unsigned m = 0; m < 31; ++m) {
                            std::uint32_t acc = 0;
                            int sz = 0;
                            for (int i = 0; i < 5; ++i)
                                if (m >> i & 1) acc += kChoose[h[i]][++sz];
                            ++cz.counts[(kSubsetOffset[sz] + acc) * 13u + cat];
                        }
                    }
                }
            }
        }
    }
    return cz;
}

const DrawCensus& census_for(PayVariant v) {
    if (v == PayVariant::standard) {
        static const DrawCensus c = build_census(PayVariant::standard);
        return c;
    }
    static const DrawCensus c = build_census(PayVariant::deuces_wild);
    return c;
}

/// Scaled payout sums over the C(47, 5-k) draw completions of one hold.
struct MaskMoments {
    std::uint64_t s1 = 0;
    std::uint64_t s2 = 0;
    std::uint32_t draws = 1;
};

/// Exact draw-category counts by inclusion-exclusion over the discards:
/// hands extending the held cards, minus those reusing a discarded card.
MaskMoments mask_moments(const DrawCensus& cz, const std::uint8_t* x, unsigned mask,
                         const std::uint64_t* w) {
    int r = 5 - std::popcount(mask);
    std::int64_t n[13] = {};
    for (unsigned u = 0; u < (1u << r); ++u) {
        std::uint8_t s[5];
        std::uint32_t acc = 0;
        int sz = 0, di = 0;
        for (int i = 0; i < 5; ++i) {
            bool take;
            if (mask >> i & 1) take = true;
            else take = (u >> di++ & 1) != 0;
            if (take) {
                s[sz] = x[i];
                acc += kChoose[x[i]][sz + 1];
                ++sz;
            }
        }
        int sign = (std::popcount(u) & 1) ? -1 : 1;
        if (sz == 5) {
            n[static_cast<int>(cz.classify(s))] += sign;
        } else {
            const std::uint32_t* row = &cz.counts[(kSubsetOffset[sz] + acc) * 13u];
            for (int c = 0; c < 13; ++c) n[c] += sign * static_cast<std::int64_t>(row[c]);
        }
    }
    MaskMoments out;
    out.draws = kChoose[47][r];
    std::int64_t total = 0;
    for (int c = 0; c < 13; ++c) {
        if (n[c] < 0) throw std::logic_error("negative draw count from inclusion-exclusion");
        total += n[c];
        out.s1 += static_cast<std::uint64_t>(n[c]) * w[c];
        out.s2 += static_cast<std::uint64_t>(n[c]) * w[c] * w[c];
    }
    if (total != static_cast<std::int64_t>(out.draws))
        throw std::logic_error("draw census does not sum to C(47, r)");
    return out;
}

/// Strict "a beats b": higher mean, then lower variance. Exact integer
/// cross-multiplication; draw counts differ between masks.
bool better(const MaskMoments& a, const MaskMoments& b) {
    u128 lhs = u128(a.s1) * b.draws;
    u128 rhs = u128(b.s1) * a.draws;
    if (lhs != rhs) return lhs > rhs;
    u128 va = u128(a.s2) * a.draws - u128(a.s1) * a.s1;  // variance * draws^2
    u128 vb = u128(b.s2) * b.draws - u128(b.s1) * b.s1;
    return va * b.draws * b.draws < vb * a.draws * a.draws;
}

struct ClassPick {
    unsigned mask = 0;
    MaskMoments mm;
};

/// Ascending mask scan with strict improvement keeps the smallest mask on
/// full ties.
ClassPick best_hold(const DrawCensus& cz, const std::uint8_t* x, const std::uint64_t* w) {
    ClassPick out{0, mask_moments(cz, x, 0, w)};
    for (unsigned m = 1; m < 32; ++m) {
        MaskMoments mm = mask_moments(cz, x, m, w);
        if (better(mm, out.mm)) out = {m, mm};
    }
    return out;
}

void permute_sorted(const std::uint8_t* in, int n, const std::array<std::uint8_t, 4>& p,
                    std::uint8_t* out) {
    for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>((in[i] & ~3) | p[in[i] & 3]);
    for (int i = 1; i < n; ++i) {
        std::uint8_t v = out[i];
        int j = i;
        while (j > 0 && out[j - 1] > v) {
            out[j] = out[j - 1];
            --j;
        }
        out[j] = v;
    }
}

/// Class weight when x (sorted) is its own canonical representative, else 0.
/// A representative's lowest permutable card is always a club, which rejects
/// three quarters of hands before the permutation scan.
std::uint32_t representative_weight(const std::uint8_t* x, PayVariant v) {
    if (v == PayVariant::standard) {
        if (x[0] & 3) return 0;
        int stab = 0;
        for (const auto& p : kSuitPerms) {
            std::uint8_t y[5];
            permute_sorted(x, 5, p, y);
            int c = std::memcmp(y, x, 5);
            if (c < 0) return 0;
            if (c == 0) ++stab;
        }
        return 24u / static_cast<std::uint32_t>(stab);
    }
    int d = 0;
    while (d < 5 && x[d] < 4) ++d;
    for (int i = 0; i < d; ++i)
        if (x[i] != i) return 0;  // canonical deuces are the lowest deuce ids
    const std::uint8_t* nd = x + d;
    int n = 5 - d;
    if (nd[0] & 3) return 0;
    int stab = 0;
    for (const auto& p : kSuitPerms) {
        std::uint8_t y[5];
        permute_sorted(nd, n, p, y);
        int c = std::memcmp(y, nd, static_cast<std::size_t>(n));
        if (c < 0) return 0;
        if (c == 0) ++stab;
    }
    return kChoose[4][d] * (24u / static_cast<std::uint32_t>(stab));
}

std::array<std::uint8_t, 5> sorted_ids(const std::array<Card, 5>& hand) {
    std::array<std::uint8_t, 5> x;
    for (int i = 0; i < 5; ++i) {
        if (hand[i].id >= 52) throw std::domain_error("invalid card in hand");
        x[i] = hand[i].id;
    }
    std::sort(x.begin(), x.end());
    for (int i = 1; i < 5; ++i)
        if (x[i] == x[i - 1]) throw std::domain_error("duplicate card in hand");
    return x;
}

mpz_class z128(u128 v) {
    mpz_class r(static_cast<unsigned long>(v >> 64));
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
    r += mpz_class(static_cast<unsigned long>(v));
    return r;
}

HoldAnalysis make_analysis(unsigned mask, const MaskMoments& mm, unsigned long lambda) {
    mpz_class draws(static_cast<unsigned long>(mm.draws));
    Rational mean(mpz_class(static_cast<unsigned long>(mm.s1)), draws * lambda);
    Rational e2(mpz_class(static_cast<unsigned long>(mm.s2)), draws * lambda * lambda);
    return {static_cast<HoldMask>(mask), mean, e2 - mean * mean};
}

constexpr char kStrategyLabel[] = "max-mean-min-variance";
constexpr char kCacheMagic[] = "nplay-strategy-cache v1";

struct CacheRow {
    std::array<std::uint8_t, 5> ids;
    std::uint32_t weight;
    std::uint8_t mask;
    std::uint64_t s1, s2;
    std::uint32_t draws;
};

void write_cache(const std::string& path, const PayTable& pay, std::size_t classes,
                 unsigned long lambda, const std::vector<std::vector<CacheRow>>& buckets) {
    std::ofstream out(path);
    if (!out) throw std::domain_error("cannot write strategy cache: " + path);
    out << kCacheMagic << "\n";
    out << "variant: " << pay_variant_name(pay.variant) << "\n";
    out << "paytable: " << std::hex << std::setw(16) << std::setfill('0') << pay.fingerprint()
        << std::dec << "\n";
    out << "classes: " << classes << "\n";
    for (const auto& bucket : buckets)
        for (const CacheRow& r : bucket) {
            mpz_class draws(static_cast<unsigned long>(r.draws));
            Rational mean(mpz_class(static_cast<unsigned long>(r.s1)), draws * lambda);
            Rational e2(mpz_class(static_cast<unsigned long>(r.s2)), draws * lambda * lambda);
            Rational var = e2 - mean * mean;
            for (int i = 0; i < 5; ++i) out << Card{r.ids[i]}.str() << ' ';
            out << r.weight << ' ' << static_cast<unsigned>(r.mask) << ' ' << mean.fraction_str()
                << ' ' << var.fraction_str() << "\n";
        }
    if (!out) throw std::domain_error("failed writing strategy cache: " + path);
}

VarianceDecomposition load_cache(std::istream& in, const std::string& path, const PayTable& pay) {
    auto corrupt = [&path]() {
        return std::domain_error("corrupt strategy cache: " + path);
    };
    auto parse_u64 = [&corrupt](const std::string& s, int base) -> std::uint64_t {
        try {
            std::size_t used = 0;
            std::uint64_t v = std::stoull(s, &used, base);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
        throw corrupt();
    };
    std::string line;
    if (!std::getline(in, line) || line != kCacheMagic)
        throw std::domain_error("unrecognized strategy cache: " + path);
    if (!std::getline(in, line) || line.rfind("variant: ", 0) != 0) throw corrupt();
    if (line.substr(9) != pay_variant_name(pay.variant))
        throw std::domain_error("strategy cache was built for a different game variant");
    if (!std::getline(in, line) || line.rfind("paytable: ", 0) != 0) throw corrupt();
    if (parse_u64(line.substr(10), 16) != pay.fingerprint())
        throw std::domain_error("strategy cache does not match the pay table");
    if (!std::getline(in, line) || line.rfind("classes: ", 0) != 0) throw corrupt();
    std::size_t expected = parse_u64(line.substr(9), 10);

    Rational wm, wm2, wv;
    std::uint64_t covered = 0;
    std::vector<std::string> means;
    means.reserve(expected);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cs[5], mean_s, var_s;
        std::uint32_t weight;
        unsigned mask;
        if (!(ls >> cs[0] >> cs[1] >> cs[2] >> cs[3] >> cs[4] >> weight >> mask >> mean_s >> var_s))
            throw corrupt();
        try {
            for (const std::string& c : cs) (void)Card::parse(c);
            Rational m = Rational::parse(mean_s);
            Rational v = Rational::parse(var_s);
            if (mask >= kNumHoldMasks || weight == 0 || m.sign() < 0 || v.sign() < 0)
                throw corrupt();
            Rational rw(static_cast<long>(weight));
            wm += rw * m;
            wm2 += rw * m * m;
            wv += rw * v;
            covered += weight;
            means.push_back(m.fraction_str());
        } catch (const std::invalid_argument&) {
            throw corrupt();
        }
        ++rows;
    }
    if (rows != expected || covered != kDeals) throw corrupt();

    Rational deals(static_cast<long>(kDeals));
    VarianceDecomposition out;
    out.e_r1 = wm / deals;
    out.v_deal = wm2 / deals - out.e_r1 * out.e_r1;
    out.v_draw = wv / deals;
    out.var_r1 = out.v_deal + out.v_draw;
    out.strategy_label = kStrategyLabel;
    out.class_count = rows;
    std::sort(means.begin(), means.end());
    out.distinct_cond_mean_count =
        static_cast<std::size_t>(std::unique(means.begin(), means.end()) - means.begin());
    return out;
}

}  // namespace

EquivalenceClass canonicalize(const std::array<Card, 5>& hand, PayVariant variant) {
    std::array<std::uint8_t, 5> x = sorted_ids(hand);
    std::uint8_t canon[5];
    std::uint32_t weight;
    if (variant == PayVariant::standard) {
        std::uint8_t best[5];
        int eq = 0;
        bool first = true;
        for (const auto& p : kSuitPerms) {
            std::uint8_t y[5];
            permute_sorted(x.data(), 5, p, y);
            int c = first ? -1 : std::memcmp(y, best, 5);
            if (c < 0) {
                std::memcpy(best, y, 5);
                eq = 1;
                first = false;
            } else if (c == 0) {
                ++eq;
            }
        }
        std::memcpy(canon, best, 5);
        weight = 24u / static_cast<std::uint32_t>(eq);
    } else {
        int d = 0;
        std::uint8_t nd[5];
        int n = 0;
        for (std::uint8_t id : x) {
            if (id < 4) ++d;
            else nd[n++] = id;
        }
        std::uint8_t best[5];
        int eq = 0;
        bool first = true;
        for (const auto& p : kSuitPerms) {
            std::uint8_t y[5];
            permute_sorted(nd, n, p, y);
            int c = first ? -1 : std::memcmp(y, best, static_cast<std::size_t>(n));
            if (c < 0) {
                std::memcpy(best, y, static_cast<std::size_t>(n));
                eq = 1;
                first = false;
            } else if (c == 0) {
                ++eq;
            }
        }
        for (int i = 0; i < d; ++i) canon[i] = static_cast<std::uint8_t>(i);
        for (int i = 0; i < n; ++i) canon[d + i] = best[i];
        weight = kChoose[4][d] * (24u / static_cast<std::uint32_t>(eq));
    }
    EquivalenceClass out;
    for (int i = 0; i < 5; ++i) out.canonical_hand[i] = Card{canon[i]};
    out.weight = weight;
    return out;
}

std::vector<EquivalenceClass> equivalence_classes(PayVariant variant) {
    std::vector<EquivalenceClass> out;
    out.reserve(140000);
    std::uint8_t x[5];
    for (int a = 0; a < 48; ++a) {
        x[0] = static_cast<std::uint8_t>(a);
        for (int b = a + 1; b < 49; ++b) {
            x[1] = static_cast<std::uint8_t>(b);
            for (int c = b + 1; c < 50; ++c) {
                x[2] = static_cast<std::uint8_t>(c);
                for (int d = c + 1; d < 51; ++d) {
                    x[3] = static_cast<std::uint8_t>(d);
                    for (int e = d + 1; e < 52; ++e) {
                        x[4] = static_cast<std::uint8_t>(e);
                        std::uint32_t wt = representative_weight(x, variant);
                        if (!wt) continue;
                        EquivalenceClass ec;
                        for (int i = 0; i < 5; ++i) ec.canonical_hand[i] = Card{x[i]};
                        ec.weight = wt;
                        out.push_back(ec);
                    }
                }
            }
        }
    }
    return out;
}

HoldAnalysis hold_distribution(const std::array<Card, 5>& hand, HoldMask mask,
                               const PayTable& pay) {
    if (mask >= kNumHoldMasks) throw std::domain_error("hold mask out of range");
    std::array<std::uint8_t, 5> x = sorted_ids(hand);
    const auto w = pay.scaled_payouts();
    const DrawCensus& cz = census_for(pay.variant);
    return make_analysis(mask, mask_moments(cz, x.data(), mask, w.data()), pay.scale());
}

HoldAnalysis optimal_hold(const std::array<Card, 5>& hand, const PayTable& pay) {
    std::array<std::uint8_t, 5> x = sorted_ids(hand);
    const auto w = pay.scaled_payouts();
    const DrawCensus& cz = census_for(pay.variant);
    ClassPick p = best_hold(cz, x.data(), w.data());
    return make_analysis(p.mask, p.mm, pay.scale());
}

VarianceDecomposition analyze_game(const PayTable& pay, const AnalyzeOptions& opts) {
    pay.validate();
    if (opts.cache_path) {
        std::ifstream in(*opts.cache_path);
        if (in) return load_cache(in, *opts.cache_path, pay);
    }
    const unsigned long lambda = pay.scale();
    const auto warr = pay.scaled_payouts();
    const std::uint64_t* w = warr.data();
    const DrawCensus& cz = census_for(pay.variant);
    const PayVariant variant = pay.variant;
    const bool keep_rows = opts.cache_path.has_value();
    std::vector<std::vector<CacheRow>> buckets(keep_rows ? 48 : 0);

    struct Acc {
        std::uint64_t covered = 0;
        std::uint64_t classes = 0;
        u128 wm = 0, wm2 = 0, wv = 0, we2 = 0;
        std::vector<std::uint64_t> means;
        void merge(const Acc& o) {
            covered += o.covered;
            classes += o.classes;
            wm += o.wm;
            wm2 += o.wm2;
            wv += o.wv;
            we2 += o.we2;
            means.insert(means.end(), o.means.begin(), o.means.end());
        }
    };

    Acc acc = parallel_block_reduce<Acc>(48, opts.workers, [&](std::uint64_t blk, Acc& a) {
        std::uint8_t x[5];
        x[0] = static_cast<std::uint8_t>(blk);
        bool viable = variant == PayVariant::standard
                          ? (x[0] & 3) == 0
                          : (x[0] < 4 ? x[0] == 0 : (x[0] & 3) == 0);
        if (!viable) return;
        for (int b = x[0] + 1; b < 49; ++b) {
            x[1] = static_cast<std::uint8_t>(b);
            for (int c = b + 1; c < 50; ++c) {
                x[2] = static_cast<std::uint8_t>(c);
                for (int d = c + 1; d < 51; ++d) {
                    x[3] = static_cast<std::uint8_t>(d);
                    for (int e = d + 1; e < 52; ++e) {
                        x[4] = static_cast<std::uint8_t>(e);
                        std::uint32_t wt = representative_weight(x, variant);
                        if (!wt) continue;
                        ClassPick p = best_hold(cz, x, w);
                        std::uint64_t q = kLambdaDraw / p.mm.draws;
                        std::uint64_t m = p.mm.s1 * q;  // cond mean, scaled by lambda*Lambda
                        u128 vnum = u128(p.mm.s2) * p.mm.draws - u128(p.mm.s1) * p.mm.s1;
                        u128 v2 = vnum * q * q;               // cond var, scaled by (lambda*Lambda)^2
                        u128 e2 = u128(p.mm.s2) * q * kLambdaDraw;  // second moment, same scale
                        a.covered += wt;
                        a.classes += 1;
                        a.wm += u128(wt) * m;
                        a.wm2 += u128(wt) * m * m;
                        a.wv += u128(wt) * v2;
                        a.we2 += u128(wt) * e2;
                        a.means.push_back(m);
                        if (keep_rows)
                            buckets[blk].push_back(
                                {{x[0], x[1], x[2], x[3], x[4]}, wt,
                                 static_cast<std::uint8_t>(p.mask), p.mm.s1, p.mm.s2, p.mm.draws});
                    }
                }
            }
        }
    });

    if (acc.covered != kDeals)
        throw std::logic_error("equivalence classes do not cover all deals");

    mpz_class n_deals(static_cast<unsigned long>(kDeals));
    mpz_class big_l(static_cast<unsigned long>(kLambdaDraw));
    mpz_class lam(lambda);
    mpz_class dm = n_deals * big_l * lam;
    mpz_class dv = n_deals * big_l * big_l * lam * lam;

    VarianceDecomposition out;
    out.e_r1 = Rational(z128(acc.wm), dm);
    Rational mean_sq(z128(acc.wm2), dv);
    out.v_deal = mean_sq - out.e_r1 * out.e_r1;
    out.v_draw = Rational(z128(acc.wv), dv);
    out.var_r1 = out.v_deal + out.v_draw;
    Rational second(z128(acc.we2), dv);
    if (second - out.e_r1 * out.e_r1 != out.var_r1)
        throw std::logic_error("second-moment route disagrees with the variance decomposition");
    out.strategy_label = kStrategyLabel;
    out.class_count = acc.classes;
    std::sort(acc.means.begin(), acc.means.end());
    out.distinct_cond_mean_count = static_cast<std::size_t>(
        std::unique(acc.means.begin(), acc.means.end()) - acc.means.begin());

    if (keep_rows) write_cache(*opts.cache_path, pay, acc.classes, lambda, buckets);
    return out;
}

std::vector<NPlayRow> nplay_table(const VarianceDecomposition& d, const std::vector<unsigned>& ns) {
    std::vector<NPlayRow> out;
    out.reserve(ns.size());
    for (unsigned n : ns) {
        if (n == 0) throw std::domain_error("n-play requires n >= 1");
        Rational rn(static_cast<long>(n));
        Rational one(1);
        Rational split = d.v_deal + d.v_draw / rn;
        Rational residual = d.var_r1 - (one - one / rn) * d.v_draw;
        Rational cov = d.v_deal;  // between-play covariance equals V_deal
        Rational exchangeable = d.var_r1 / rn + (one - one / rn) * cov;
        Rational shifted = cov + (d.var_r1 - cov) / rn;
        if (split != residual || split != exchangeable || split != shifted)
            throw std::logic_error("equivalent n-play variance forms disagree");
        SummaryStats stats = sample_mean_stats(d.e_r1, d.var_r1, cov, n);
        if (stats.variance != split)
            throw std::logic_error("sample-mean route disagrees with the n-play variance");
        out.push_back({n, stats});
    }
    return out;
}

Rational per_unit_bet_variance(const VarianceDecomposition& d, unsigned n) {
    if (n == 0) throw std::domain_error("per-unit-bet variance requires n >= 1");
    return d.var_r1 + Rational(static_cast<long>(n - 1)) * d.v_deal;
}

std::pair<Rational, Rational> covariance_identity_check(const PayTable& pay,
                                                        const ReducedDeckSpec& spec) {
    if (spec.ranks < 1 || spec.ranks > 13 || spec.suits < 1 || spec.suits > 4)
        throw std::domain_error("reduced deck must fit inside the real deck");
    int deck_size = spec.ranks * spec.suits;
    if (deck_size < 5) throw std::domain_error("reduced deck needs at least 5 cards");
    if (deck_size > 12) throw std::domain_error("reduced deck too large for brute force");
    pay.validate();
    const auto w = pay.scaled_payouts();
    const unsigned long lambda = pay.scale();
    Classifier cls = classifier_for(pay.variant);

    std::vector<std::uint8_t> deck;
    for (int r = 0; r < spec.ranks; ++r)
        for (int s = 0; s < spec.suits; ++s)
            deck.push_back(static_cast<std::uint8_t>(r * 4 + s));
    int pool_size = deck_size - 5;

    // all r-subsets of pool indices, ascending
    auto for_each_draw = [](int n, int r, auto&& fn) {
        std::array<int, 5> idx{};
        for (int i = 0; i < r; ++i) idx[i] = i;
        for (;;) {
            fn(idx.data());
            int i = r - 1;
            while (i >= 0 && idx[i] == n - r + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        }
    };

    Rational mean_sum, m2_sum, pair_sum;
    long deal_count = 0;
    std::array<int, 5> di{};
    for (di[0] = 0; di[0] < deck_size - 4; ++di[0])
        for (di[1] = di[0] + 1; di[1] < deck_size - 3; ++di[1])
            for (di[2] = di[1] + 1; di[2] < deck_size - 2; ++di[2])
                for (di[3] = di[2] + 1; di[3] < deck_size - 1; ++di[3])
                    for (di[4] = di[3] + 1; di[4] < deck_size; ++di[4]) {
                        std::uint8_t x[5];
                        for (int i = 0; i < 5; ++i) x[i] = deck[di[i]];
                        std::vector<std::uint8_t> pool;
                        pool.reserve(pool_size);
                        for (int i = 0, j = 0; i < deck_size; ++i) {
                            if (j < 5 && i == di[j]) ++j;
                            else pool.push_back(deck[i]);
                        }

                        // winner over feasible masks, by literal draw enumeration
                        bool have = false;
                        MaskMoments bm;
                        unsigned bmask = 0;
                        for (unsigned m = 0; m < 32; ++m) {
                            int r = 5 - std::popcount(m);
                            if (r > pool_size) continue;
                            MaskMoments mm;
                            mm.draws = static_cast<std::uint32_t>(
                                binomial_u64(static_cast<unsigned>(pool_size),
                                             static_cast<unsigned>(r)));
                            for_each_draw(pool_size, r, [&](const int* t) {
                                std::uint8_t f[5];
                                int sz = 0;
                                for (int i = 0; i < 5; ++i)
                                    if (m >> i & 1) f[sz++] = x[i];
                                for (int i = 0; i < r; ++i) f[sz++] = pool[t[i]];
                                std::uint64_t pv = w[static_cast<int>(cls(f))];
                                mm.s1 += pv;
                                mm.s2 += pv * pv;
                            });
                            if (!have || better(mm, bm)) {
                                bm = mm;
                                bmask = m;
                                have = true;
                            }
                        }

                        mpz_class draws(static_cast<unsigned long>(bm.draws));
                        Rational m_x(mpz_class(static_cast<unsigned long>(bm.s1)), draws * lambda);
                        mean_sum += m_x;
                        m2_sum += m_x * m_x;
                        ++deal_count;

                        // E[R1 R2 | X] by a genuine double enumeration of draws
                        int r = 5 - std::popcount(bmask);
                        std::vector<std::uint64_t> payouts;
                        payouts.reserve(bm.draws);
                        for_each_draw(pool_size, r, [&](const int* t) {
                            std::uint8_t f[5];
                            int sz = 0;
                            for (int i = 0; i < 5; ++i)
                                if (bmask >> i & 1) f[sz++] = x[i];
                            for (int i = 0; i < r; ++i) f[sz++] = pool[t[i]];
                            payouts.push_back(w[static_cast<int>(cls(f))]);
                        });
                        u128 pp = 0;
                        for (std::uint64_t p1 : payouts)
                            for (std::uint64_t p2 : payouts) pp += u128(p1) * p2;
                        pair_sum += Rational(z128(pp), draws * draws * lambda * lambda);
                    }

    Rational deals(deal_count);
    Rational e = mean_sum / deals;
    Rational v_deal = m2_sum / deals - e * e;
    Rational cov = pair_sum / deals - e * e;
    return {cov, v_deal};
}

}  // namespace nplay
