#include "nplay/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace nplay {

namespace {

std::string cards_str(const std::vector<Card>& cards) {
    std::string out;
    for (const Card& c : cards) {
        if (!out.empty()) out += ' ';
        out += c.str();
    }
    return out;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

ReportDocument holdem_report(const AllInState& state, Seat player, const RunItNReport& report) {
    ReportDocument doc;
    doc.scenario = "holdem-run-it-n";
    doc.method = std::string(run_method_name(report.method));

    doc.exact.emplace_back("mean", report.mean.fraction_str());
    doc.exact.emplace_back("var1", report.var1.fraction_str());
    doc.exact.emplace_back("cov12", report.cov12.fraction_str());
    doc.decimal.emplace_back("mean", report.mean.to_decimal(6));
    doc.decimal.emplace_back("var1", report.var1.to_decimal(6));
    doc.decimal.emplace_back("cov12", report.cov12.to_decimal(6));

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const SummaryStats& s = report.rows[i];
        doc.rows.push_back({static_cast<unsigned>(i + 1), s.mean.to_decimal(6),
                            s.variance.to_decimal(6), s.std_dev});
    }

    doc.notes.emplace_back("player", player == Seat::hero ? "hero" : "villain");
    doc.notes.emplace_back("hero", cards_str({state.hero.begin(), state.hero.end()}));
    doc.notes.emplace_back("villain", cards_str({state.villain.begin(), state.villain.end()}));
    doc.notes.emplace_back("board", state.board.empty() ? "(preflop)" : cards_str(state.board));
    if (!state.dead.empty()) doc.notes.emplace_back("dead", cards_str(state.dead.cards()));
    if (state.mucked_hands > 0)
        doc.notes.emplace_back("mucked-hands", std::to_string(state.mucked_hands));
    if (report.mc) {
        doc.notes.emplace_back("samples", std::to_string(report.mc->samples));
        doc.notes.emplace_back("seed", std::to_string(report.mc->seed));
        doc.notes.emplace_back("mean-ci99-half-width", fixed6(report.mc->mean_ci_half_width));
        doc.notes.emplace_back("var1-ci99-half-width", fixed6(report.mc->var1_ci_half_width));
    }
    return doc;
}

ReportDocument videopoker_report(const PayTable& pay, const VarianceDecomposition& decomp,
                                 const std::vector<NPlayRow>& rows) {
    ReportDocument doc;
    doc.scenario = "videopoker-nplay";
    doc.method = decomp.strategy_label;

    doc.exact.emplace_back("expected-return", decomp.e_r1.fraction_str());
    doc.exact.emplace_back("variance", decomp.var_r1.fraction_str());
    doc.exact.emplace_back("deal-variance", decomp.v_deal.fraction_str());
    doc.exact.emplace_back("draw-variance", decomp.v_draw.fraction_str());
    doc.decimal.emplace_back("expected-return", decomp.e_r1.to_decimal(6));
    doc.decimal.emplace_back("variance", decomp.var_r1.to_decimal(6));
    doc.decimal.emplace_back("deal-variance", decomp.v_deal.to_decimal(6));
    doc.decimal.emplace_back("draw-variance", decomp.v_draw.to_decimal(6));

    for (const NPlayRow& r : rows)
        doc.rows.push_back({r.n, r.stats.mean.to_decimal(6), r.stats.variance.to_decimal(6),
                            r.stats.std_dev});

    if (!pay.name.empty()) doc.notes.emplace_back("game", pay.name);
    doc.notes.emplace_back("variant", std::string(pay_variant_name(pay.variant)));
    doc.notes.emplace_back("hand-classes", std::to_string(decomp.class_count));
    doc.notes.emplace_back("distinct-conditional-means",
                           std::to_string(decomp.distinct_cond_mean_count));
    char fp[32];
    std::snprintf(fp, sizeof fp, "%016llx",
                  static_cast<unsigned long long>(pay.fingerprint()));
    doc.notes.emplace_back("paytable-fingerprint", fp);
    return doc;
}

std::string render_table(const ReportDocument& doc) {
    std::ostringstream out;
    out << "scenario: " << doc.scenario << "\n";
    out << "method: " << doc.method << "\n";

    std::size_t key_w = 0;
    for (const auto& [k, v] : doc.exact) key_w = std::max(key_w, k.size());
    for (const auto& [k, v] : doc.decimal) key_w = std::max(key_w, k.size());

    out << "\nexact:\n";
    for (const auto& [k, v] : doc.exact)
        out << "  " << k << std::string(key_w - k.size() + 2, ' ') << v << "\n";
    out << "\ndecimal:\n";
    for (const auto& [k, v] : doc.decimal)
        out << "  " << k << std::string(key_w - k.size() + 2, ' ') << v << "\n";

    if (!doc.rows.empty()) {
        auto cell = [&out](const std::string& s, std::size_t w) {
            out << std::string(w > s.size() ? w - s.size() : 1, ' ') << s;
        };
        out << "\n";
        cell("n", 5);
        cell("mean", 12);
        cell("variance", 12);
        cell("std-dev", 12);
        out << "\n";
        for (const ReportRow& r : doc.rows) {
            cell(std::to_string(r.n), 5);
            cell(r.mean, 12);
            cell(r.variance, 12);
            cell(r.std_dev, 12);
            out << "\n";
        }
    }

    if (!doc.notes.empty()) {
        out << "\nnotes:\n";
        for (const auto& [k, v] : doc.notes) out << "  " << k << ": " << v << "\n";
    }
    return out.str();
}

std::string render_json(const ReportDocument& doc) {
    nlohmann::ordered_json j;
    j["scenario"] = doc.scenario;
    j["method"] = doc.method;
    j["exact"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : doc.exact) j["exact"][k] = v;
    j["decimal"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : doc.decimal) j["decimal"][k] = v;
    j["rows"] = nlohmann::ordered_json::array();
    for (const ReportRow& r : doc.rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["mean"] = r.mean;
        row["variance"] = r.variance;
        row["std-dev"] = r.std_dev;
        j["rows"].push_back(row);
    }
    if (!doc.notes.empty()) {
        j["notes"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : doc.notes) j["notes"][k] = v;
    }
    return j.dump(2) + "\n";
}

}  // namespace nplay
