#pragma once

// Presentation layer shared by the CLI and its tests.  A report document is
// a flat, ordered snapshot of one analysis: exact fractions first, decimal
// renderings second, then the per-n rows.  Every decimal string is derived
// from an exact Rational, so rendering the same analysis twice is
// byte-identical.

#include "nplay/holdem.hpp"
#include "nplay/paytable.hpp"
#include "nplay/videopoker.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nplay {

struct ReportRow {
    unsigned n = 0;
    std::string mean;
    std::string variance;
    std::string std_dev;
};

struct ReportDocument {
    std::string scenario;
    std::string method;
    std::vector<std::pair<std::string, std::string>> exact;
    std::vector<std::pair<std::string, std::string>> decimal;
    std::vector<ReportRow> rows;
    std::vector<std::pair<std::string, std::string>> notes;
};

ReportDocument holdem_report(const AllInState& state, Seat player, const RunItNReport& report);

ReportDocument videopoker_report(const PayTable& pay, const VarianceDecomposition& decomp,
                                 const std::vector<NPlayRow>& rows);

std::string render_table(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);

}  // namespace nplay
