#include "tbk/paper_suite.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tbk/errors.hpp"
#include "tbk/ideal_points.hpp"
#include "tbk/surfaces.hpp"

namespace tbk {

using nlohmann::json;

namespace {

std::int64_t to_i64(const Integer& z) {
  if (!z.fits_slong_p()) throw InvalidArgument("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << "}";
  return os.str();
}

std::string join_points(const std::vector<LatticePoint>& pts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << "(" << pts[i].l << "," << pts[i].m << ")";
  return os.str();
}

std::vector<std::string> slope_strings(const std::set<Slope>& slopes) {
  std::vector<std::string> out;
  for (const auto& s : slopes) out.push_back(s.to_string());
  return out;
}

json record_to_json(const KnotRecord& r) {
  json exps = json::array();
  for (const auto& e : r.expansions)
    exps.push_back({{"entries", e.entries},
                    {"representative", e.representative},
                    {"slope", e.slope},
                    {"symmetric", e.symmetric},
                    {"ideal_points", e.ideal_points}});
  return {{"knot", {{"p", r.p}, {"q", r.q}}},
          {"expansions", exps},
          {"symmetric_slopes", r.symmetric_slopes},
          {"all_slopes", r.all_slopes}};
}

KnotRecord record_from_json(const json& j) {
  KnotRecord r;
  r.p = j.at("knot").at("p").get<std::int64_t>();
  r.q = j.at("knot").at("q").get<std::int64_t>();
  for (const auto& e : j.at("expansions"))
    r.expansions.push_back({e.at("entries").get<std::vector<Entry>>(), e.at("representative").get<std::string>(),
                            e.at("slope").get<std::int64_t>(), e.at("symmetric").get<bool>(),
                            e.at("ideal_points").get<std::uint64_t>()});
  r.symmetric_slopes = j.at("symmetric_slopes").get<std::vector<std::int64_t>>();
  r.all_slopes = j.at("all_slopes").get<std::vector<std::int64_t>>();
  return r;
}

json parse_or_throw(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

KnotRecord knot_record(const Rational& p_over_q) {
  const SlopeReport report = slope_report(p_over_q);
  KnotRecord r;
  r.p = to_i64(p_over_q.numerator());
  r.q = to_i64(p_over_q.denominator());
  for (const auto& d : report.data)
    r.expansions.push_back(
        {d.expansion.entries, d.representative.to_string(), d.slope, d.symmetric, d.ideal_point_count});
  r.symmetric_slopes = report.symmetric_slopes();
  r.all_slopes = report.all_slopes();
  return r;
}

std::string knot_record_json(const KnotRecord& record, int indent) { return record_to_json(record).dump(indent); }

KnotRecord parse_knot_record_json(std::string_view text) {
  try {
    return record_from_json(parse_or_throw(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("knot record JSON: ") + e.what());
  }
}

bool PaperReport::hard_checks_passed() const {
  for (const auto& c : cases)
    for (const auto& k : c.checks)
      if (k.kind == CheckKind::hard && !k.passed) return false;
  return true;
}

std::string report_json(const PaperReport& report, int indent) {
  json cases = json::array();
  for (const auto& c : report.cases) {
    json polys = json::array();
    for (const auto& p : c.polygons) {
      json corners = json::array();
      for (const auto& pt : p.corners) corners.push_back({pt.l, pt.m});
      polys.push_back({{"label", p.label}, {"corners", corners}, {"edge_slopes", p.edge_slopes}});
    }
    json checks = json::array();
    for (const auto& k : c.checks)
      checks.push_back({{"name", k.name},
                        {"kind", k.kind == CheckKind::hard ? "hard" : "report"},
                        {"passed", k.passed},
                        {"expected", k.expected},
                        {"computed", k.computed}});
    cases.push_back({{"n", c.n}, {"knot", record_to_json(c.knot)}, {"polygons", polys}, {"checks", checks}});
  }
  json j{{"n_min", report.n_min},
         {"n_max", report.n_max},
         {"hard_checks_passed", report.hard_checks_passed()},
         {"cases", cases}};
  return j.dump(indent);
}

PaperReport parse_report_json(std::string_view text) {
  const json j = parse_or_throw(text);
  try {
    PaperReport r;
    r.n_min = j.at("n_min").get<int>();
    r.n_max = j.at("n_max").get<int>();
    for (const auto& c : j.at("cases")) {
      PaperCase pc;
      pc.n = c.at("n").get<int>();
      pc.knot = record_from_json(c.at("knot"));
      for (const auto& p : c.at("polygons")) {
        PolygonRecord pr;
        pr.label = p.at("label").get<std::string>();
        for (const auto& pt : p.at("corners")) pr.corners.push_back({pt.at(0).get<std::int64_t>(), pt.at(1).get<std::int64_t>()});
        pr.edge_slopes = p.at("edge_slopes").get<std::vector<std::string>>();
        pc.polygons.push_back(std::move(pr));
      }
      for (const auto& k : c.at("checks")) {
        const auto kind = k.at("kind").get<std::string>();
        if (kind != "hard" && kind != "report") throw ParseError("unknown check kind '" + kind + "'");
        pc.checks.push_back({k.at("name").get<std::string>(), kind == "hard" ? CheckKind::hard : CheckKind::report,
                             k.at("passed").get<bool>(), k.at("expected").get<std::string>(),
                             k.at("computed").get<std::string>()});
      }
      r.cases.push_back(std::move(pc));
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

std::string report_text(const PaperReport& report) {
  std::ostringstream os;
  for (const auto& c : report.cases) {
    os << "K_" << c.n << " = K(" << c.knot.p << "/" << c.knot.q << ")\n";
    for (const auto& k : c.checks) {
      const char* tag = k.kind == CheckKind::report ? (k.passed ? "REPORT-MATCH" : "REPORT-DIFF") : (k.passed ? "PASS" : "FAIL");
      os << "  " << tag << " " << k.name;
      if (!k.passed || k.kind == CheckKind::report) os << "\n      expected: " << k.expected << "\n      computed: " << k.computed;
      os << "\n";
    }
  }
  os << (report.hard_checks_passed() ? "all hard checks passed" : "hard check failures present") << "\n";
  return os.str();
}

std::vector<ContinuedFraction> k_n_expansions(int n) {
  if (n < 1) throw InvalidArgument("K_n needs n >= 1");
  const Entry m = n;
  const std::vector<Entry> minus_plus{-2, 2};
  const std::vector<Entry> plus_minus{2, -2};
  const auto rep = expand_repetition(minus_plus, static_cast<std::size_t>(n - 1));
  const auto rep2 = expand_repetition(plus_minus, static_cast<std::size_t>(n - 1));

  ContinuedFraction a{0, {2 * m, -2 * m}};
  ContinuedFraction b{0, {2 * m - 1, 2}};
  b.entries.insert(b.entries.end(), rep.begin(), rep.end());
  ContinuedFraction c{0, rep};
  c.entries.insert(c.entries.end(), {-2, -2 * m + 1});
  ContinuedFraction d{0, rep};
  d.entries.push_back(-3);
  d.entries.insert(d.entries.end(), rep2.begin(), rep2.end());
  return {a, b, c, d};
}

std::vector<LatticePoint> quoted_full_corners(int n) {
  const std::int64_t m = n;
  return {{0, 12 * m - 1}, {2, 12 * m - 1}, {1, 4 * m}, {3, 8 * m - 2}, {2, 0}, {4, 0}};
}

std::vector<LatticePoint> quoted_component_corners(int n) {
  const std::int64_t m = n;
  return {{0, 8 * m - 2}, {1, 8 * m - 2}, {1, 0}, {2, 0}};
}

namespace {

Check hard(std::string name, std::string expected, std::string computed) {
  const bool ok = expected == computed;
  return {std::move(name), CheckKind::hard, ok, std::move(expected), std::move(computed)};
}

Check corner_comparison(std::string name, std::vector<LatticePoint> expected,
                        const std::vector<std::pair<std::string, std::vector<LatticePoint>>>& candidates) {
  std::sort(expected.begin(), expected.end());
  Check check{std::move(name), CheckKind::report, false, join_points(expected), ""};
  std::ostringstream os;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto got = candidates[i].second;
    std::sort(got.begin(), got.end());
    std::vector<LatticePoint> missing, extra;
    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    if (missing.empty() && extra.empty()) check.passed = true;
    os << (i ? "; " : "") << candidates[i].first << ": " << join_points(got) << " [missing " << join_points(missing)
       << " | extra " << join_points(extra) << "]";
  }
  check.computed = os.str();
  return check;
}

PolygonRecord polygon_record(std::string label, const MultiPoly& poly) {
  const auto np = newton_polygon(poly);
  return {std::move(label), np.corners, slope_strings(edge_slopes(np, kCalibratedConvention))};
}

void add_apoly_checks(PaperCase& pc, const Rational& fraction) {
  const std::int64_t n = pc.n;
  const std::string expected_slopes = join(std::vector<std::string>{
      std::to_string(-8 * n + 2), std::to_string(-4 * n), "0"});

  APolyResult nonabelian;
  APolyResult with_abelian;
  try {
    nonabelian = a_polynomial(fraction, {.keep_abelian = false, .split = true});
    with_abelian = a_polynomial(fraction, {.keep_abelian = true, .split = false});
  } catch (const Error& e) {
    pc.checks.push_back(hard("apoly_edge_slopes", expected_slopes, std::string("error: ") + e.what()));
    return;
  }
  pc.polygons.push_back(polygon_record("nonabelian", nonabelian.full.poly));
  pc.polygons.push_back(polygon_record("with_abelian", with_abelian.full.poly));
  std::vector<std::pair<std::string, std::vector<LatticePoint>>> components;
  for (const auto& comp : nonabelian.components) {
    pc.polygons.push_back(polygon_record("component:" + to_string(comp.tag), comp.poly));
    components.emplace_back(to_string(comp.tag), pc.polygons.back().corners);
  }

  pc.checks.push_back(hard("apoly_edge_slopes", expected_slopes, join(pc.polygons[0].edge_slopes)));

  std::string canonical = "none", other = "none";
  for (const auto& p : pc.polygons) {
    if (p.label == "component:canonical") canonical = join(p.edge_slopes);
    if (p.label == "component:other") other = join(p.edge_slopes);
  }
  pc.checks.push_back(hard("apoly_canonical_component_slopes",
                           join(std::vector<std::string>{std::to_string(-8 * n + 2), "0"}), canonical));
  pc.checks.push_back(hard("apoly_other_component_slopes",
                           join(std::vector<std::string>{std::to_string(-4 * n), "0"}), other));

  pc.checks.push_back(corner_comparison("quoted_full_corners", quoted_full_corners(pc.n),
                                        {{"with_abelian", pc.polygons[1].corners},
                                         {"nonabelian", pc.polygons[0].corners}}));
  pc.checks.push_back(corner_comparison("quoted_component_corners", quoted_component_corners(pc.n), components));
}

PaperCase run_case(int n, const SuiteOptions& options) {
  PaperCase pc;
  pc.n = n;
  const std::int64_t m = n;
  const Rational fraction(Integer(2 * n), Integer(4 * m * m - 1));
  pc.knot = knot_record(fraction);

  const auto quoted = k_n_expansions(n);
  std::vector<ContinuedFraction> sorted_quoted = quoted;
  std::sort(sorted_quoted.begin(), sorted_quoted.end());
  std::vector<std::string> expected_cfs, computed_cfs;
  for (const auto& cf : sorted_quoted) expected_cfs.push_back(cf.to_string());
  for (const auto& e : pc.knot.expansions) computed_cfs.push_back(ContinuedFraction{0, e.entries}.to_string());
  pc.checks.push_back(hard("expansions", join(expected_cfs), join(computed_cfs)));

  std::vector<std::int64_t> slopes;
  std::vector<BranchedSurface> surfaces;
  try {
    for (const auto& cf : quoted) {
      surfaces.push_back(make_surface(cf, fraction));
      slopes.push_back(boundary_slope(surfaces.back()));
    }
  } catch (const Error& e) {
    pc.checks.push_back(hard("expansion_slopes", "four valid surfaces", std::string("error: ") + e.what()));
    return pc;
  }
  pc.checks.push_back(hard("expansion_slopes", join(std::vector<std::int64_t>{0, -4 * m, -4 * m, -8 * m + 2}),
                           join(slopes)));
  pc.checks.push_back(hard("all_slopes", join(std::vector<std::int64_t>{-8 * m + 2, -4 * m, 0}),
                           join(pc.knot.all_slopes)));
  pc.checks.push_back(
      hard("symmetric_slopes", join(std::vector<std::int64_t>{-8 * m + 2, 0}), join(pc.knot.symmetric_slopes)));

  const bool exchanged = flip(surfaces[1]) == surfaces[2] && flip(surfaces[2]) == surfaces[1];
  const bool pair_asymmetric = !is_symmetric(surfaces[1]) && !is_symmetric(surfaces[2]);
  pc.checks.push_back(hard("flip_exchanges_slope_-4n_pair", "exchanged, both non-symmetric",
                           std::string(exchanged ? "exchanged" : "not exchanged") + ", " +
                               (pair_asymmetric ? "both non-symmetric" : "symmetric member present")));
  pc.checks.push_back(hard("flip_fixes_slope_0_and_-8n+2", "fixed, fixed",
                           std::string(is_symmetric(surfaces[0]) ? "fixed" : "moved") + ", " +
                               (is_symmetric(surfaces[3]) ? "fixed" : "moved")));

  std::vector<std::uint64_t> by_class, by_orbit;
  for (int i : {1, 2}) {
    by_class.push_back(ideal_point_classes(quoted[static_cast<std::size_t>(i)]).size());
    by_orbit.push_back(count_ideal_points_by_orbits(quoted[static_cast<std::size_t>(i)]));
  }
  const auto nm1 = static_cast<std::uint64_t>(n - 1);
  pc.checks.push_back(hard("ideal_points_slope_-4n", join(std::vector<std::uint64_t>{nm1, nm1}), join(by_class)));
  pc.checks.push_back(hard("ideal_point_count_methods_agree", join(by_class), join(by_orbit)));

  std::vector<std::int64_t> detected;
  for (const auto& [slope, count] : detected_slopes_with_counts(fraction)) detected.push_back(slope);
  pc.checks.push_back(hard("detected_slopes", join(std::vector<std::int64_t>{-8 * m + 2, -4 * m, 0}), join(detected)));

  if (n <= options.apoly_n_max) add_apoly_checks(pc, fraction);
  return pc;
}

}  // namespace

PaperReport run_paper_suite(int n_min, int n_max, const SuiteOptions& options) {
  if (n_min < 2 || n_min > n_max)
    throw InvalidArgument("paper suite needs 2 <= n_min <= n_max, got " + std::to_string(n_min) + ", " +
                          std::to_string(n_max));
  PaperReport report{n_min, n_max, {}};
  for (int n = n_min; n <= n_max; ++n) report.cases.push_back(run_case(n, options));
  return report;
}

}  // namespace tbk
