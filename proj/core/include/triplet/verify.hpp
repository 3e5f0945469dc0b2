#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triplet/rootsys.hpp"
#include "triplet/weyl.hpp"

namespace triplet {

/// Parameter grid shared by all checks. Each check walks the part of the grid it
/// applies to (rank limits are recorded in the report notes).
struct GridSpec {
  std::vector<CartanType> types;
  /// p = h + offset for each offset (values below 2 are dropped) unless p_values is set.
  std::vector<int> p_offsets{-1, 0, 1, 2};
  std::vector<int> p_values;
  /// alpha runs over enum_dominant_in_Q with bound |rho| + alpha_extra.
  int alpha_extra = 3;
  /// Order for single-series checks.
  int order = 30;
  /// Order for comparisons between two character families.
  int compare_order = 20;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  /// Reduced words of w0 tried per digit vector in lemma216_equiv.
  std::size_t reduced_words = 1;

  /// A1, A2, A3 with p in {h-1, ..., h+2}.
  static GridSpec defaults();

  std::vector<int> p_list(const RootSystem& rs) const;
  std::string describe() const;
};

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string input;
  std::string computed;
  std::string expected;
};

struct CheckReport {
  std::string check;
  std::string grid;
  CheckStatus status = CheckStatus::skipped;
  /// Grid points evaluated.
  std::int64_t points = 0;
  /// Total number of failing points; only the first few are kept in counterexamples.
  std::int64_t failures = 0;
  std::vector<CheckRecord> counterexamples;
  /// Rows of report-only checks.
  std::vector<CheckRecord> informational;
  std::vector<std::string> notes;
  bool report_only = false;
  std::int64_t runtime_ms = 0;
};

/// Names accepted by run_check, in the order run_all reports them.
const std::vector<std::string>& check_names();

/// Throws std::invalid_argument for an unknown name.
CheckReport run_check(const std::string& name, const GridSpec& grid);

/// Runs every check concurrently; reports come back in check_names() order.
std::vector<CheckReport> run_all(const GridSpec& grid);

/// True when no asserting check failed.
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace triplet
