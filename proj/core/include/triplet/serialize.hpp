#pragma once

#include <string>
#include <vector>

#include "triplet/qseries.hpp"
#include "triplet/verify.hpp"

namespace triplet {

enum class OutputFormat { json, csv, text };

/// "json", "csv" or "text".
OutputFormat parse_format(const std::string& name);

/// {"base": {"num": n, "den": d}, "coeffs": [...], "order": N}
std::string series_json(const QSeries& s);
/// Header plus one row per coefficient: n,exponent_num,exponent_den,coeff
std::string series_csv(const QSeries& s);
/// Aligned columns n, exponent, coefficient.
std::string series_text(const QSeries& s);
std::string format_series(const QSeries& s, OutputFormat f);

/// Reports as {"passed": bool, "reports": [{"check", "status", "grid", "counterexamples", ...}]}.
/// runtime_ms is emitted only when with_timings is set, so default output is byte-stable.
std::string reports_json(const std::vector<CheckReport>& reports, bool with_timings);
/// One row per report: check,status,points,failures[,runtime_ms]
std::string reports_csv(const std::vector<CheckReport>& reports, bool with_timings);
std::string reports_text(const std::vector<CheckReport>& reports, bool with_timings);
std::string format_reports(const std::vector<CheckReport>& reports, OutputFormat f, bool with_timings);

}  // namespace triplet
