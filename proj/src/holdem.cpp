#include "nplay/holdem.hpp"

#include "nplay/combin.hpp"
#include "nplay/eval.hpp"
#include "nplay/parallel.hpp"
#include "nplay/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace nplay {

namespace {

// Pot share per outcome index: win, tie, loss.
const Rational kShare[3] = {Rational(1), Rational(1, 2), Rational(0)};

int outcome_index(ShowdownResult r, Seat player) {
    if (r == ShowdownResult::tie) return 1;
    bool hero_won = (r == ShowdownResult::a_wins);
    bool player_won = (player == Seat::hero) ? hero_won : !hero_won;
    return player_won ? 0 : 2;
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
    return Rational(mpz_class(static_cast<unsigned long>(num)),
                    mpz_class(static_cast<unsigned long>(den)));
}

}  // namespace

void AllInState::validate() const {
    if (board.size() != 0 && board.size() != 3 && board.size() != 4)
        throw std::domain_error("state: board must have 0, 3, or 4 cards");
    CardSet all = dead;
    int expected = dead.size();
    for (Card c : hero) {
        all.add(c);
        ++expected;
    }
    for (Card c : villain) {
        all.add(c);
        ++expected;
    }
    for (Card c : board) {
        all.add(c);
        ++expected;
    }
    if (all.size() != expected) throw std::domain_error("state: duplicate cards");
    // 2m + 3 burns + one full run must fit the street's deck bound.
    if (mucked_hands > 20)
        throw std::domain_error("state: too many mucked hands for a single run");
}

CardSet AllInState::seen() const {
    CardSet s = dead;
    for (Card c : hero) s.add(c);
    for (Card c : villain) s.add(c);
    for (Card c : board) s.add(c);
    return s;
}

int plan_max_runs(const AllInState& state) {
    state.validate();
    int base = 0;
    switch (state.board.size()) {
        case 4: base = 44; break;
        case 3: base = 45; break;
        case 0: base = 48; break;
    }
    int free_cards = base - (2 * static_cast<int>(state.mucked_hands) + 3);
    return free_cards / state.cards_to_come();
}

std::string_view run_method_name(RunMethod m) {
    switch (m) {
        case RunMethod::closed_form: return "closed-form";
        case RunMethod::exact_enumeration: return "exact-enumeration";
        case RunMethod::suit_composition: return "suit-composition";
        case RunMethod::monte_carlo: return "monte-carlo";
    }
    return "";
}

void RunOutcomeDistribution::finalize() {
    Rational one(1);
    Rational msum = marginal[0] + marginal[1] + marginal[2];
    if (msum != one) throw std::logic_error("run distribution: marginal does not sum to 1");
    Rational jsum;
    for (int a = 0; a < 3; ++a) {
        Rational row;
        for (int b = 0; b < 3; ++b) {
            if (joint[a][b].sign() < 0) throw std::logic_error("run distribution: negative entry");
            if (joint[a][b] != joint[b][a])
                throw std::logic_error("run distribution: joint not symmetric");
            row += joint[a][b];
        }
        if (row != marginal[a])
            throw std::logic_error("run distribution: joint row does not match marginal");
        jsum += row;
    }
    if (jsum != one) throw std::logic_error("run distribution: joint does not sum to 1");

    e_r1 = Rational(0);
    Rational e_sq;
    for (int a = 0; a < 3; ++a) {
        e_r1 += kShare[a] * marginal[a];
        e_sq += kShare[a] * kShare[a] * marginal[a];
    }
    var_r1 = e_sq - e_r1 * e_r1;
    Rational e_cross;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) e_cross += kShare[a] * kShare[b] * joint[a][b];
    cov_r12 = e_cross - e_r1 * e_r1;
    if (var_r1.sign() < 0) throw std::logic_error("run distribution: negative variance");
}

RunOutcomeDistribution RunOutcomeDistribution::flipped() const {
    RunOutcomeDistribution f;
    for (int a = 0; a < 3; ++a) f.marginal[2 - a] = marginal[a];
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) f.joint[2 - a][2 - b] = joint[a][b];
    f.finalize();
    return f;
}

OutsTies classify_river_outcomes(const AllInState& state, Seat player) {
    state.validate();
    if (state.board.size() != 4)
        throw std::domain_error("river outs: board must have 4 cards");
    std::array<Card, 5> full_board = {state.board[0], state.board[1], state.board[2],
                                      state.board[3], Card(0)};
    OutsTies outs;
    for (Card river : state.unseen().cards()) {
        full_board[4] = river;
        switch (outcome_index(showdown(state.hero, state.villain, full_board), player)) {
            case 0: ++outs.o; break;
            case 1: ++outs.t; break;
            default: ++outs.losses; break;
        }
    }
    return outs;
}

OneCardMoments one_card_moments(const OutsTies& outs) {
    if (outs.o < 0 || outs.t < 0 || outs.losses < 0 || outs.unseen() < 1)
        throw std::domain_error("one card: invalid outs");
    long N = outs.unseen(), o = outs.o, t = outs.t;
    OneCardMoments m;
    m.mean = Rational(4 * o + 2 * t, 4 * N);
    m.var1 = Rational(4 * o + t, 4 * N) - m.mean * m.mean;
    // E[R1 R2] over ordered pairs of distinct river cards.
    if (N >= 2)
        m.cov12 = Rational(4 * o * (o - 1) + 4 * o * t + t * (t - 1), 4 * N * (N - 1)) -
                  m.mean * m.mean;
    return m;
}

SummaryStats one_card_stats(const OutsTies& outs, unsigned n) {
    long N = outs.unseen();
    if (n < 1) throw std::domain_error("one card: n must be positive");
    if (static_cast<long>(n) > N)
        throw std::domain_error("one card: n exceeds the unseen card count");
    if (outs.t == 0) {
        // Hypergeometric closed form with the finite-population correction.
        Rational p(outs.o, N);
        Rational var = p * (Rational(1) - p) / Rational(static_cast<long>(n));
        if (n >= 2) var *= Rational(1) - Rational(static_cast<long>(n) - 1, N - 1);
        return SummaryStats::from_moments(p, var);
    }
    OneCardMoments m = one_card_moments(outs);
    return sample_mean_stats(m.mean, m.var1, m.cov12, n);
}

RunOutcomeDistribution two_card_joint(const AllInState& state, Seat player) {
    state.validate();
    if (state.board.size() != 3)
        throw std::domain_error("two card joint: board must have 3 cards");
    auto unseen = state.unseen().cards();
    int N = static_cast<int>(unseen.size());
    if (N < 4) throw std::domain_error("two card joint: needs two disjoint runs");

    // Outcome of every unordered completion, memoized before the pair loop.
    std::array<Card, 5> full_board = {state.board[0], state.board[1], state.board[2], Card(0),
                                      Card(0)};
    struct Pair {
        int i, j;
        std::int8_t out;
    };
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(N) * (N - 1) / 2);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            full_board[3] = unseen[i];
            full_board[4] = unseen[j];
            int out = outcome_index(showdown(state.hero, state.villain, full_board), player);
            pairs.push_back({i, j, static_cast<std::int8_t>(out)});
        }

    std::uint64_t marg_count[3] = {};
    std::uint64_t joint_count[3][3] = {};
    for (const Pair& p : pairs) ++marg_count[p.out];
    for (const Pair& a : pairs)
        for (const Pair& b : pairs) {
            if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) continue;
            ++joint_count[a.out][b.out];
        }

    std::uint64_t marg_den = binomial_u64(N, 2);
    std::uint64_t joint_den = marg_den * binomial_u64(N - 2, 2);
    RunOutcomeDistribution dist;
    for (int a = 0; a < 3; ++a) {
        dist.marginal[a] = ratio(marg_count[a], marg_den);
        for (int b = 0; b < 3; ++b) dist.joint[a][b] = ratio(joint_count[a][b], joint_den);
    }
    dist.finalize();
    return dist;
}

RunOutcomeDistribution mirrored_pair_joint(const AllInState& state) {
    state.validate();
    if (!state.board.empty())
        throw std::domain_error("mirrored pair: board must be empty");
    int r = state.hero[0].rank();
    if (state.hero[1].rank() != r || state.villain[0].rank() != r || state.villain[1].rank() != r)
        throw std::domain_error("mirrored pair: players must split one rank's four cards");
    if (!state.dead.empty())
        throw std::domain_error("mirrored pair: dead cards break the suit-composition count");

    // Suit axes 0,1 belong to the hero, 2,3 to the villain; the board is a
    // composition (c0,c1,c2,c3) of 5 over the four 12-card suit residues.
    // A seat wins a run exactly when one of its suits reaches 4 on board.
    struct Comp {
        int c[4];
        std::uint64_t weight;
        int out;
    };
    std::vector<Comp> comps;
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (int c = 0; a + b + c <= 5; ++c) {
                int d = 5 - a - b - c;
                Comp comp{{a, b, c, d}, 0, 1};
                comp.weight = binomial_u64(12, a) * binomial_u64(12, b) * binomial_u64(12, c) *
                              binomial_u64(12, d);
                if (a >= 4 || b >= 4) comp.out = 0;
                else if (c >= 4 || d >= 4) comp.out = 2;
                comps.push_back(comp);
            }

    std::uint64_t marg_count[3] = {};
    for (const Comp& c : comps) marg_count[c.out] += c.weight;

    std::uint64_t joint_count[3][3] = {};
    for (const Comp& first : comps)
        for (const Comp& second : comps) {
            std::uint64_t w = first.weight;
            for (int s = 0; s < 4 && w; ++s)
                w *= binomial_u64(12 - first.c[s], second.c[s]);
            if (w) joint_count[first.out][second.out] += w;
        }

    std::uint64_t marg_den = binomial_u64(48, 5);
    std::uint64_t joint_den = marg_den * binomial_u64(43, 5);
    RunOutcomeDistribution dist;
    for (int a = 0; a < 3; ++a) {
        dist.marginal[a] = ratio(marg_count[a], marg_den);
        for (int b = 0; b < 3; ++b) dist.joint[a][b] = ratio(joint_count[a][b], joint_den);
    }
    dist.finalize();
    return dist;
}

namespace {

constexpr std::uint64_t kMcBlock = 65536;

struct McTally {
    std::uint64_t w = 0, t = 0, w2 = 0, wt = 0, t2 = 0;
    void merge(const McTally& o) {
        w += o.w;
        t += o.t;
        w2 += o.w2;
        wt += o.wt;
        t2 += o.t2;
    }
};

std::vector<SummaryStats> rows_from_moments(const Rational& mean, const Rational& var1,
                                            const Rational& cov12, unsigned n_max) {
    std::vector<SummaryStats> rows;
    rows.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) rows.push_back(sample_mean_stats(mean, var1, cov12, n));
    return rows;
}

RunItNReport mc_report(const AllInState& state, Seat player, unsigned n, std::uint64_t samples,
                       std::uint64_t seed, int workers) {
    state.validate();
    if (n < 1) throw std::domain_error("monte carlo: n must be positive");
    if (static_cast<int>(n) > plan_max_runs(state))
        throw std::domain_error("monte carlo: n exceeds the street's run bound");
    if (samples < 1) throw std::invalid_argument("monte carlo: sample count must be positive");

    const int c = state.cards_to_come();
    const auto unseen = state.unseen().cards();
    const int N = static_cast<int>(unseen.size());
    if (static_cast<int>(n) * c > N)
        throw std::domain_error("monte carlo: dead cards leave too few for n runs");

    std::vector<std::uint8_t> deck0;
    deck0.reserve(N);
    for (Card card : unseen) deck0.push_back(card.id);
    const int fixed = static_cast<int>(state.board.size());
    std::uint8_t seven_a[7], seven_b[7];
    seven_a[0] = state.hero[0].id;
    seven_a[1] = state.hero[1].id;
    seven_b[0] = state.villain[0].id;
    seven_b[1] = state.villain[1].id;
    for (int i = 0; i < fixed; ++i) seven_a[2 + i] = seven_b[2 + i] = state.board[i].id;

    const std::uint64_t blocks = (samples + kMcBlock - 1) / kMcBlock;
    McTally tally = parallel_block_reduce<McTally>(blocks, workers, [&](std::uint64_t block,
                                                                        McTally& acc) {
        std::mt19937_64 gen = make_stream(seed, block);
        std::vector<std::uint8_t> deck(deck0.size());
        std::uint8_t a7[7], b7[7];
        std::copy(seven_a, seven_a + 7, a7);
        std::copy(seven_b, seven_b + 7, b7);
        const std::uint64_t lo = block * kMcBlock;
        const std::uint64_t hi = std::min(samples, lo + kMcBlock);
        const int draw = static_cast<int>(n) * c;
        for (std::uint64_t trial = lo; trial < hi; ++trial) {
            deck = deck0;
            for (int i = 0; i < draw; ++i) {
                int j = i + static_cast<int>(bounded_rand(gen, N - i));
                std::swap(deck[i], deck[j]);
            }
            std::uint64_t wins = 0, ties = 0;
            for (unsigned run = 0; run < n; ++run) {
                for (int k = 0; k < c; ++k)
                    a7[2 + fixed + k] = b7[2 + fixed + k] = deck[run * c + k];
                ShowdownRank ra = rank7_ids(a7);
                ShowdownRank rb = rank7_ids(b7);
                if (ra == rb) ++ties;
                else if ((ra > rb) == (player == Seat::hero)) ++wins;
            }
            acc.w += wins;
            acc.t += ties;
            acc.w2 += wins * wins;
            acc.wt += wins * ties;
            acc.t2 += ties * ties;
        }
    });

    // Exact rational estimators from the integer tallies.  Per trial, with
    // w wins and t ties over n runs: sum R = w + t/2, sum R^2 = w + t/4.
    const std::uint64_t s = samples;
    Rational e_hat = ratio(2 * tally.w + tally.t, 2 * s * n);
    Rational e_sq = ratio(4 * tally.w + tally.t, 4 * s * n);
    Rational v_hat = e_sq - e_hat * e_hat;
    Rational c_hat;
    if (n >= 2) {
        Rational cross = ratio(4 * tally.w2 + 4 * tally.wt + tally.t2 - 4 * tally.w - tally.t,
                               4 * s * n * (n - 1));
        c_hat = cross - e_hat * e_hat;
    }

    // Standard errors: Y = trial mean of R, Z = trial mean of R^2; the
    // variance estimate is Z̄ - Ȳ², so its error follows the delta method.
    Rational ey2 = ratio(4 * tally.w2 + 4 * tally.wt + tally.t2, 4 * s * n * n);
    Rational ez2 = ratio(16 * tally.w2 + 8 * tally.wt + tally.t2, 16 * s * n * n);
    Rational eyz = ratio(8 * tally.w2 + 6 * tally.wt + tally.t2, 8 * s * n * n);
    Rational var_y = ey2 - e_hat * e_hat;
    Rational var_z = ez2 - e_sq * e_sq;
    Rational cov_yz = eyz - e_hat * e_sq;
    Rational s_rat(mpz_class(static_cast<unsigned long>(s)), mpz_class(1));
    Rational mean_se2 = var_y / s_rat;
    Rational var1_se2 =
        (var_z + Rational(4) * e_hat * e_hat * var_y - Rational(4) * e_hat * cov_yz) / s_rat;

    RunItNReport report;
    report.n_max = n;
    report.method = RunMethod::monte_carlo;
    report.mean = e_hat;
    report.var1 = v_hat;
    report.cov12 = c_hat;
    report.rows = rows_from_moments(e_hat, v_hat, c_hat, n);
    McMeta meta;
    meta.samples = s;
    meta.seed = seed;
    meta.mean_estimate = e_hat;
    meta.var1_estimate = v_hat;
    meta.cov_estimate = c_hat;
    meta.mean_se2 = mean_se2;
    meta.var1_se2 = var1_se2;
    meta.mean_ci_half_width = kCiZ99 * std::sqrt(mean_se2.to_double());
    meta.var1_ci_half_width = kCiZ99 * std::sqrt(var1_se2.to_double());
    report.mc = meta;
    return report;
}

bool is_mirrored_pair(const AllInState& state) {
    int r = state.hero[0].rank();
    return state.board.empty() && state.hero[1].rank() == r && state.villain[0].rank() == r &&
           state.villain[1].rank() == r;
}

}  // namespace

RunItNReport five_card_monte_carlo(const AllInState& state, Seat player, unsigned n,
                                   std::uint64_t samples, std::uint64_t seed, int workers) {
    if (!state.board.empty())
        throw std::domain_error("monte carlo: five-card runs need an empty board");
    return mc_report(state, player, n, samples, seed, workers);
}

RunItNReport run_it_n_report(const AllInState& state, Seat player, unsigned n_max,
                             MethodChoice method, const std::optional<McParams>& mc) {
    state.validate();
    if (n_max < 1) throw std::domain_error("report: n_max must be positive");
    int cap = plan_max_runs(state);
    if (static_cast<int>(n_max) > cap)
        throw std::domain_error("report: n_max " + std::to_string(n_max) +
                                " exceeds the street's bound of " + std::to_string(cap));

    const std::size_t street = state.board.size();
    RunMethod resolved = RunMethod::monte_carlo;
    switch (method) {
        case MethodChoice::auto_select:
            if (street == 4) resolved = RunMethod::closed_form;
            else if (street == 3) resolved = RunMethod::exact_enumeration;
            else if (is_mirrored_pair(state) && state.dead.empty())
                resolved = RunMethod::suit_composition;
            else resolved = RunMethod::monte_carlo;
            break;
        case MethodChoice::closed_form:
            if (street != 4) throw std::domain_error("closed form needs a 4-card board");
            resolved = RunMethod::closed_form;
            break;
        case MethodChoice::exact_enumeration:
            if (street != 3) throw std::domain_error("exact enumeration needs a 3-card board");
            resolved = RunMethod::exact_enumeration;
            break;
        case MethodChoice::suit_composition:
            resolved = RunMethod::suit_composition;
            break;
        case MethodChoice::monte_carlo:
            resolved = RunMethod::monte_carlo;
            break;
    }

    if (resolved == RunMethod::monte_carlo) {
        if (!mc)
            throw std::invalid_argument("monte carlo requires sample count and seed parameters");
        return mc_report(state, player, n_max, mc->samples, mc->seed, mc->workers);
    }

    RunItNReport report;
    report.n_max = n_max;
    report.method = resolved;
    switch (resolved) {
        case RunMethod::closed_form: {
            OutsTies outs = classify_river_outcomes(state, player);
            if (static_cast<int>(n_max) > outs.unseen())
                throw std::domain_error("report: dead cards leave too few rivers for n_max runs");
            OneCardMoments m = one_card_moments(outs);
            report.mean = m.mean;
            report.var1 = m.var1;
            report.cov12 = m.cov12;
            report.rows.reserve(n_max);
            for (unsigned n = 1; n <= n_max; ++n) report.rows.push_back(one_card_stats(outs, n));
            break;
        }
        case RunMethod::exact_enumeration: {
            RunOutcomeDistribution dist = two_card_joint(state, player);
            report.mean = dist.e_r1;
            report.var1 = dist.var_r1;
            report.cov12 = dist.cov_r12;
            report.rows = rows_from_moments(dist.e_r1, dist.var_r1, dist.cov_r12, n_max);
            break;
        }
        case RunMethod::suit_composition: {
            RunOutcomeDistribution dist = mirrored_pair_joint(state);
            if (player == Seat::villain) dist = dist.flipped();
            report.mean = dist.e_r1;
            report.var1 = dist.var_r1;
            report.cov12 = dist.cov_r12;
            report.rows = rows_from_moments(dist.e_r1, dist.var_r1, dist.cov_r12, n_max);
            break;
        }
        case RunMethod::monte_carlo: break;  // handled above
    }
    return report;
}

}  // namespace nplay
