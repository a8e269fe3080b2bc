#include "nplay/holdem.hpp"
#include "nplay/paytable.hpp"
#include "nplay/report.hpp"
#include "nplay/videopoker.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace nplay;

std::array<Card, 2> parse_hole(const std::string& text, const char* who) {
    auto cards = CardSet::parse(text).cards();
    if (cards.size() != 2)
        throw std::invalid_argument(std::string(who) + " needs exactly two cards");
    return {cards[0], cards[1]};
}

std::vector<unsigned> parse_plays(const std::string& csv) {
    std::vector<unsigned> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(item, &used);
            if (used != item.size() || v == 0 || v > 1000000)
                throw std::invalid_argument("");
            out.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad --plays entry: " + item);
        }
    }
    if (out.empty()) throw std::invalid_argument("--plays must list at least one play count");
    return out;
}

PayTable resolve_game(const std::string& game) {
    try {
        return PayTable::preset(game);
    } catch (const std::invalid_argument&) {
    }
    std::ifstream in(game);
    if (!in) throw std::domain_error("no preset or readable pay-table file named " + game);
    std::stringstream ss;
    ss << in.rdbuf();
    PayTable pay = PayTable::parse(ss.str());
    if (pay.name.empty()) pay.name = game;
    return pay;
}

struct HoldemArgs {
    std::string hero, villain, board, dead;
    unsigned mucked = 0;
    unsigned runs = 4;
    std::string method = "auto";
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::string format = "table";
};

struct VideoPokerArgs {
    std::string game;
    std::string plays = "1,3,5,10,25,50,100";
    std::string cache;
    std::string format = "table";
};

int run_holdem(const HoldemArgs& a, int threads) {
    AllInState state;
    state.hero = parse_hole(a.hero, "--hero");
    state.villain = parse_hole(a.villain, "--villain");
    state.board = CardSet::parse(a.board).cards();
    state.dead = CardSet::parse(a.dead);
    state.mucked_hands = a.mucked;

    MethodChoice choice =
        a.method == "mc" ? MethodChoice::monte_carlo : MethodChoice::auto_select;
    McParams mc;
    mc.samples = a.samples;
    mc.seed = a.seed;
    mc.workers = threads;
    RunItNReport report = run_it_n_report(state, Seat::hero, a.runs, choice, mc);

    ReportDocument doc = holdem_report(state, Seat::hero, report);
    std::cout << (a.format == "json" ? render_json(doc) : render_table(doc));
    return 0;
}

int run_videopoker(const VideoPokerArgs& a, int threads) {
    PayTable pay = resolve_game(a.game);
    std::vector<unsigned> plays = parse_plays(a.plays);

    AnalyzeOptions opts;
    opts.workers = threads;
    if (!a.cache.empty()) opts.cache_path = a.cache;
    VarianceDecomposition decomp = analyze_game(pay, opts);
    std::vector<NPlayRow> rows = nplay_table(decomp, plays);

    ReportDocument doc = videopoker_report(pay, decomp, rows);
    std::cout << (a.format == "json" ? render_json(doc) : render_table(doc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact variance analytics for run-it-n-times all-ins and n-play video poker"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads, 0 = all hardware threads");

    HoldemArgs ha;
    CLI::App* hold = app.add_subcommand("holdem", "two-player all-in, board run n times");
    hold->add_option("--hero", ha.hero, "hero hole cards, e.g. \"Ts Tc\"")->required();
    hold->add_option("--villain", ha.villain, "villain hole cards")->required();
    hold->add_option("--board", ha.board, "board cards dealt so far (0, 3, or 4)");
    hold->add_option("--dead", ha.dead, "exposed cards removed from the deck");
    hold->add_option("--mucked-hands", ha.mucked, "folded two-card hands, unseen but undealable");
    hold->add_option("--runs", ha.runs, "number of runs n (rows cover 1..n)");
    hold->add_option("--method", ha.method, "auto or mc")
        ->check(CLI::IsMember({"auto", "mc"}));
    hold->add_option("--samples", ha.samples, "Monte Carlo sample count");
    hold->add_option("--seed", ha.seed, "Monte Carlo seed");
    hold->add_option("--format", ha.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    VideoPokerArgs va;
    CLI::App* vp = app.add_subcommand("videopoker", "n-play variance decomposition");
    vp->add_option("--game", va.game,
                   "preset (jacks-or-better-9-6, deuces-wild-full-pay) or pay-table file")
        ->required();
    vp->add_option("--plays", va.plays, "comma-separated play counts");
    vp->add_option("--cache", va.cache, "strategy cache file to reuse or create");
    vp->add_option("--format", va.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (hold->parsed()) return run_holdem(ha, threads);
        return run_videopoker(va, threads);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
