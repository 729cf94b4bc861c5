#pragma once

/**
 * @file paper_suite.hpp
 * @brief Per-knot slope records and the regression suite over the double
 * twist knots K_n = J(2n, 2n) = K(2n/(4n^2 - 1)).
 *
 * Records serialize to JSON with stable keys:
 *   {"knot":{"p":..,"q":..},
 *    "expansions":[{"entries":[..],"representative":"a/b","slope":..,
 *                   "symmetric":..,"ideal_points":..}],
 *    "symmetric_slopes":[..],"all_slopes":[..]}
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tbk/charvar.hpp"
#include "tbk/continued_fraction.hpp"

namespace tbk {

struct ExpansionRecord {
  std::vector<Entry> entries;
  std::string representative;
  std::int64_t slope = 0;
  bool symmetric = false;
  std::uint64_t ideal_points = 0;
  friend bool operator==(const ExpansionRecord&, const ExpansionRecord&) = default;
};

struct KnotRecord {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<ExpansionRecord> expansions;
  std::vector<std::int64_t> symmetric_slopes;
  std::vector<std::int64_t> all_slopes;
  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

KnotRecord knot_record(const Rational& p_over_q);
std::string knot_record_json(const KnotRecord& record, int indent = 2);
KnotRecord parse_knot_record_json(std::string_view text);

enum class CheckKind {
  hard,    // counts toward the exit status
  report,  // printed with its differences, never a failure
};

struct Check {
  std::string name;
  CheckKind kind = CheckKind::hard;
  bool passed = false;
  std::string expected;
  std::string computed;
  friend bool operator==(const Check&, const Check&) = default;
};

struct PolygonRecord {
  std::string label;
  std::vector<LatticePoint> corners;
  std::vector<std::string> edge_slopes;
  friend bool operator==(const PolygonRecord&, const PolygonRecord&) = default;
};

struct PaperCase {
  int n = 0;
  KnotRecord knot;
  std::vector<PolygonRecord> polygons;
  std::vector<Check> checks;
  friend bool operator==(const PaperCase&, const PaperCase&) = default;
};

struct PaperReport {
  int n_min = 0;
  int n_max = 0;
  std::vector<PaperCase> cases;  // ascending n
  bool hard_checks_passed() const;
  friend bool operator==(const PaperReport&, const PaperReport&) = default;
};

std::string report_json(const PaperReport& report, int indent = 2);
PaperReport parse_report_json(std::string_view text);
std::string report_text(const PaperReport& report);

/// The four expansions [2n,-2n], [2n-1,2,(-2,2)_(n-1)],
/// [(-2,2)_(n-1),-2,-2n+1], [(-2,2)_(n-1),-3,(2,-2)_(n-1)] in that order.
std::vector<ContinuedFraction> k_n_expansions(int n);

/// Corner lists quoted for K_n: the full A-polynomial and one component.
std::vector<LatticePoint> quoted_full_corners(int n);
std::vector<LatticePoint> quoted_component_corners(int n);

struct SuiteOptions {
  int apoly_n_max = 3;  // A-polynomial checks run for n <= apoly_n_max
};

/// Requires 2 <= n_min <= n_max (InvalidArgument otherwise). Failures are
/// recorded as checks, never thrown.
PaperReport run_paper_suite(int n_min, int n_max, const SuiteOptions& options = {});

}  // namespace tbk
