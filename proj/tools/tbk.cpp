#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tbk/charvar.hpp"
#include "tbk/continued_fraction.hpp"
#include "tbk/errors.hpp"
#include "tbk/knot_id.hpp"
#include "tbk/paper_suite.hpp"
#include "tbk/poly_io.hpp"
#include "tbk/valuation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

using tbk::Integer;
using tbk::Rational;

// Accepts "p/q" with integers already in lowest terms.
Rational parse_fraction(const std::string& text) {
  static const std::regex pattern(R"(\s*(\d+)\s*/\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw tbk::ParseError("expected a fraction p/q, got '" + text + "'");
  const Integer p(m[1].str());
  const Integer q(m[2].str());
  if (q == 0) throw tbk::InvalidArgument("zero denominator in '" + text + "'");
  if (gcd(p, q) != 1) throw tbk::InvalidArgument(text + " is not in lowest terms");
  Rational r(p, q);
  tbk::require_two_bridge_fraction(r);
  return r;
}

int cmd_expand(const std::string& fraction, bool as_json) {
  const Rational f = parse_fraction(fraction);
  if (as_json) {
    std::cout << tbk::knot_record_json(tbk::knot_record(f)) << "\n";
    return kExitOk;
  }
  for (const auto& e : tbk::enumerate_admissible(f))
    std::cout << e.cf.to_string() << "  = " << e.representative.to_string() << "\n";
  return kExitOk;
}

int cmd_slopes(const std::string& fraction, bool as_json) {
  const Rational f = parse_fraction(fraction);
  const auto record = tbk::knot_record(f);
  if (as_json) {
    std::cout << tbk::knot_record_json(record) << "\n";
    return kExitOk;
  }
  std::cout << "expansion\trepresentative\tslope\tsymmetric\tideal_points\n";
  for (const auto& e : record.expansions)
    std::cout << tbk::ContinuedFraction{0, e.entries}.to_string() << "\t" << e.representative << "\t" << e.slope
              << "\t" << (e.symmetric ? "yes" : "no") << "\t" << e.ideal_points << "\n";
  auto list = [](const std::vector<std::int64_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
  };
  std::cout << "all slopes: " << list(record.all_slopes) << "\n";
  std::cout << "symmetric slopes: " << list(record.symmetric_slopes) << "\n";
  return kExitOk;
}

int cmd_jkl(long k, long l, bool identify_mirrors) {
  const auto convention = identify_mirrors ? tbk::MirrorConvention::identify : tbk::MirrorConvention::distinguish;
  const auto knot = tbk::double_twist_to_two_bridge(k, l, convention);
  std::cout << "J(" << k << "," << l << ") = " << knot.id.to_string() << "  fraction " << knot.id.fraction()
            << (knot.hyperbolic ? "  hyperbolic" : "  torus knot") << "\n";
  return kExitOk;
}

int cmd_apoly(const std::string& fraction, bool keep_abelian, const std::string& out) {
  const Rational f = parse_fraction(fraction);
  const auto result = tbk::a_polynomial(f, {.keep_abelian = keep_abelian, .split = false});
  if (out.empty()) {
    tbk::write_apoly(std::cout, result.full.poly);
  } else {
    std::ofstream os(out);
    if (!os) throw tbk::InvalidArgument("cannot open '" + out + "' for writing");
    tbk::write_apoly(os, result.full.poly);
  }
  return kExitOk;
}

int cmd_polygon(const std::string& file, const std::string& axis, bool negate, bool half) {
  std::ifstream in(file);
  if (!in) throw tbk::InvalidArgument("cannot open '" + file + "'");
  const auto poly = tbk::read_apoly(in);
  tbk::SlopeConvention convention{axis == "ml" ? tbk::SlopeConvention::Axis::ml : tbk::SlopeConvention::Axis::lm,
                                  negate, half};
  const auto np = tbk::newton_polygon(poly);
  nlohmann::json corners = nlohmann::json::array();
  for (const auto& c : np.corners) corners.push_back({c.l, c.m});
  nlohmann::json slopes = nlohmann::json::array();
  for (const auto& s : tbk::edge_slopes(np, convention)) slopes.push_back(s.to_string());
  std::cout << nlohmann::json{{"convention", convention.to_string()}, {"corners", corners}, {"edge_slopes", slopes}}.dump(2)
            << "\n";
  return kExitOk;
}

std::string order_string(const tbk::Order& o) { return o ? std::to_string(*o) : "inf"; }

// Matrix file: one `matrix e11 e12 e21 e22` line per generator; `#` starts a
// comment. Entries are rational functions of t without spaces.
int cmd_valuation(const std::string& file, std::size_t depth) {
  std::ifstream in(file);
  if (!in) throw tbk::InvalidArgument("cannot open '" + file + "'");
  std::vector<tbk::Mat2> gens;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::string keyword;
    if (!(is >> keyword)) continue;
    if (keyword != "matrix") throw tbk::ParseError("line " + std::to_string(lineno) + ": expected 'matrix'");
    std::string rest;
    std::getline(is, rest);
    gens.push_back(tbk::Mat2::parse(rest));
  }
  if (gens.empty()) throw tbk::ParseError("no matrices in '" + file + "'");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto tr = gens[i].trace();
    std::cout << "g" << i << ": trace " << tr.to_string() << "  ord " << order_string(tbk::ord(tr))
              << "  fixes_vertex " << (tbk::fixes_vertex(gens[i]) ? "yes" : "no") << "  translation_length "
              << tbk::translation_length(gens[i]) << "\n";
  }
  if (auto cert = tbk::nontriviality_certificate(gens, depth)) {
    std::cout << "certificate: ";
    for (const auto& letter : cert->word) std::cout << "g" << letter.generator << (letter.inverse ? "^-1 " : " ");
    std::cout << " trace ord " << cert->trace_order << "\n";
  } else {
    std::cout << "certificate: none up to word length " << depth << "\n";
  }
  return kExitOk;
}

int cmd_verify(int n_min, int n_max, bool as_json) {
  const auto report = tbk::run_paper_suite(n_min, n_max);
  std::cout << (as_json ? tbk::report_json(report) + "\n" : tbk::report_text(report));
  return report.hard_checks_passed() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-bridge knot boundary slopes, A-polynomials and valuations"};
  app.require_subcommand(1);

  std::string fraction;
  bool as_json = false;

  auto* expand = app.add_subcommand("expand", "Admissible continued-fraction expansions of p/q");
  expand->add_option("fraction", fraction, "p/q with q odd")->required();
  expand->add_flag("--json", as_json, "Emit JSON");

  auto* slopes = app.add_subcommand("slopes", "Boundary slopes, symmetry and ideal-point counts");
  slopes->add_option("fraction", fraction, "p/q with q odd")->required();
  slopes->add_flag("--json", as_json, "Emit JSON");

  long k = 0, l = 0;
  bool identify_mirrors = false;
  auto* jkl = app.add_subcommand("jkl", "Normalize the double twist knot J(k,l)");
  jkl->add_option("k", k)->required();
  jkl->add_option("l", l)->required();
  jkl->add_flag("--identify-mirrors", identify_mirrors, "Treat a knot and its mirror image as equal");

  bool keep_abelian = false;
  std::string out;
  auto* apoly = app.add_subcommand("apoly", "A-polynomial in the '# apoly v1' format");
  apoly->add_option("fraction", fraction, "p/q with q odd")->required();
  apoly->add_flag("--keep-abelian", keep_abelian, "Keep the factor L - 1");
  apoly->add_option("--out", out, "Output file");

  std::string file;
  std::string axis = "lm";
  bool negate = false, half = false;
  auto* polygon = app.add_subcommand("polygon", "Newton polygon corners and edge slopes of an apoly file");
  polygon->add_option("file", file)->required();
  polygon->add_option("--convention", axis, "Slope axis order")->check(CLI::IsMember({"lm", "ml"}));
  polygon->add_flag("--negate", negate, "Negate slopes");
  polygon->add_flag("--half", half, "Halve slopes");

  std::size_t depth = 3;
  auto* valuation = app.add_subcommand("valuation", "Fixed-vertex and certificate diagnostics for SL2(Q(t))");
  valuation->add_option("file", file, "Matrix file")->required();
  valuation->add_option("--depth", depth, "Word length searched for a certificate")->check(CLI::Range(1, 8));

  bool paper = false;
  int n_min = 2, n_max = 10;
  auto* verify = app.add_subcommand("verify", "Regression suite over K_n");
  verify->add_flag("--paper", paper, "Run the K_n suite")->required();
  verify->add_option("--n-min", n_min);
  verify->add_option("--n-max", n_max);
  verify->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*expand) return cmd_expand(fraction, as_json);
    if (*slopes) return cmd_slopes(fraction, as_json);
    if (*jkl) return cmd_jkl(k, l, identify_mirrors);
    if (*apoly) return cmd_apoly(fraction, keep_abelian, out);
    if (*polygon) return cmd_polygon(file, axis, negate, half);
    if (*valuation) return cmd_valuation(file, depth);
    if (*verify) return cmd_verify(n_min, n_max, as_json);
  } catch (const tbk::ComputationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const tbk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
