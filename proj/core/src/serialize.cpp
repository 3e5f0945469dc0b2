#include "triplet/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace triplet {

namespace {

using ordered = nlohmann::ordered_json;

ordered record_json(const CheckRecord& r) {
  return ordered{{"input", r.input}, {"computed", r.computed}, {"expected", r.expected}};
}

ordered report_json(const CheckReport& r, bool with_timings) {
  ordered j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["grid"] = r.grid;
  j["report_only"] = r.report_only;
  j["points"] = r.points;
  j["failures"] = r.failures;
  j["counterexamples"] = ordered::array();
  for (const auto& c : r.counterexamples) j["counterexamples"].push_back(record_json(c));
  if (!r.informational.empty()) {
    j["informational"] = ordered::array();
    for (const auto& c : r.informational) j["informational"].push_back(record_json(c));
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (with_timings) j["runtime_ms"] = r.runtime_ms;
  return j;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown output format '" + name + "' (expected json, csv or text)");
}

std::string series_json(const QSeries& s) {
  ordered j;
  j["base"] = ordered{{"num", num(s.base())}, {"den", den(s.base())}};
  j["coeffs"] = ordered::array();
  for (const auto& c : s.coeffs()) j["coeffs"].push_back(to_i64(c));
  j["order"] = s.order();
  return j.dump(2) + "\n";
}

std::string series_csv(const QSeries& s) {
  std::ostringstream out;
  out << "n,exponent_num,exponent_den,coeff\n";
  for (int n = 0; n <= s.order(); ++n) {
    const Rational e = s.base() + Rational(n);
    out << n << ',' << num(e) << ',' << den(e) << ',' << to_i64(s.coeffs()[static_cast<std::size_t>(n)]) << '\n';
  }
  return out.str();
}

std::string series_text(const QSeries& s) {
  std::vector<std::string> exps;
  std::vector<std::string> coeffs;
  std::size_t we = std::string("exponent").size();
  std::size_t wc = std::string("coeff").size();
  for (int n = 0; n <= s.order(); ++n) {
    exps.push_back(to_string(s.base() + Rational(n)));
    coeffs.push_back(std::to_string(to_i64(s.coeffs()[static_cast<std::size_t>(n)])));
    we = std::max(we, exps.back().size());
    wc = std::max(wc, coeffs.back().size());
  }
  const std::size_t wn = std::max<std::size_t>(1, std::to_string(s.order()).size());
  std::ostringstream out;
  out << "base " << to_string(s.base()) << ", order " << s.order() << '\n';
  out << std::setw(static_cast<int>(wn)) << "n" << "  " << std::setw(static_cast<int>(we)) << "exponent" << "  "
      << std::setw(static_cast<int>(wc)) << "coeff" << '\n';
  for (int n = 0; n <= s.order(); ++n)
    out << std::setw(static_cast<int>(wn)) << n << "  " << std::setw(static_cast<int>(we))
        << exps[static_cast<std::size_t>(n)] << "  " << std::setw(static_cast<int>(wc))
        << coeffs[static_cast<std::size_t>(n)] << '\n';
  return out.str();
}

std::string format_series(const QSeries& s, OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return series_json(s);
    case OutputFormat::csv:
      return series_csv(s);
    case OutputFormat::text:
      return series_text(s);
  }
  return {};
}

std::string reports_json(const std::vector<CheckReport>& reports, bool with_timings) {
  ordered j;
  j["passed"] = all_passed(reports);
  j["reports"] = ordered::array();
  for (const auto& r : reports) j["reports"].push_back(report_json(r, with_timings));
  return j.dump(2) + "\n";
}

std::string reports_csv(const std::vector<CheckReport>& reports, bool with_timings) {
  std::ostringstream out;
  out << "check,status,points,failures" << (with_timings ? ",runtime_ms" : "") << '\n';
  for (const auto& r : reports) {
    out << r.check << ',' << to_string(r.status) << ',' << r.points << ',' << r.failures;
    if (with_timings) out << ',' << r.runtime_ms;
    out << '\n';
  }
  return out.str();
}

std::string reports_text(const std::vector<CheckReport>& reports, bool with_timings) {
  std::size_t width = 0;
  for (const auto& r : reports) width = std::max(width, r.check.size());
  std::ostringstream out;
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(width)) << r.check << "  " << std::setw(7) << to_string(r.status)
        << "  points=" << r.points << " failures=" << r.failures;
    if (r.report_only) out << " (report only)";
    if (with_timings) out << " " << r.runtime_ms << "ms";
    out << '\n';
    for (const auto& c : r.counterexamples)
      out << "    counterexample: " << c.input << ": got " << c.computed << ", expected " << c.expected << '\n';
    for (const auto& c : r.informational)
      out << "    " << c.input << ": " << c.computed << " (reference " << c.expected << ")\n";
    for (const auto& n : r.notes) out << "    note: " << n << '\n';
  }
  out << (all_passed(reports) ? "all asserting checks passed" : "some checks failed") << '\n';
  return out.str();
}

std::string format_reports(const std::vector<CheckReport>& reports, OutputFormat f, bool with_timings) {
  switch (f) {
    case OutputFormat::json:
      return reports_json(reports, with_timings);
    case OutputFormat::csv:
      return reports_csv(reports, with_timings);
    case OutputFormat::text:
      return reports_text(reports, with_timings);
  }
  return {};
}

}  // namespace triplet
