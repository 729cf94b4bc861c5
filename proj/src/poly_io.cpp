#include "tbk/poly_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "tbk/errors.hpp"

namespace tbk {

void write_apoly(std::ostream& os, const MultiPoly& p) {
  os << kApolyHeader << "\nvars";
  for (const auto& name : p.vars().names()) os << ' ' << name;
  os << '\n';
  for (const auto& t : p.terms()) {
    os << "term";
    for (std::size_t v = 0; v < p.nvars(); ++v) os << ' ' << p.exponent(t.key, v);
    os << ' ' << t.coeff.get_str() << '\n';
  }
}

std::string format_apoly(const MultiPoly& p) {
  std::ostringstream os;
  write_apoly(os, p);
  return os.str();
}

namespace {

std::uint32_t parse_exponent(const std::string& tok, std::size_t line_no) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("line " + std::to_string(line_no) + ": bad exponent '" + tok + "'");
  unsigned long v = std::stoul(tok);
  if (v > MultiPoly::kMaxDegree)
    throw ParseError("line " + std::to_string(line_no) + ": exponent too large");
  return static_cast<std::uint32_t>(v);
}

Integer parse_coefficient(const std::string& tok, std::size_t line_no) {
  std::size_t start = (!tok.empty() && tok[0] == '-') ? 1 : 0;
  if (tok.size() == start || tok.find_first_not_of("0123456789", start) != std::string::npos)
    throw ParseError("line " + std::to_string(line_no) + ": bad coefficient '" + tok + "'");
  return Integer(tok);
}

}  // namespace

MultiPoly read_apoly(std::istream& is) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(is, line) || line != kApolyHeader)
    throw ParseError("line 1: expected '" + std::string(kApolyHeader) + "'");

  ++line_no;
  if (!std::getline(is, line)) throw ParseError("line 2: missing 'vars' line");
  std::istringstream vs(line);
  std::string word;
  vs >> word;
  if (word != "vars") throw ParseError("line 2: expected 'vars'");
  std::vector<std::string> names;
  while (vs >> word) names.push_back(word);
  VarSet vars(names);

  std::vector<std::pair<MultiPoly::Exponents, Integer>> terms;
  MultiPoly probe(vars);
  std::optional<MultiPoly::Key> last;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ts(line);
    std::vector<std::string> toks;
    while (ts >> word) toks.push_back(word);
    if (toks.empty()) continue;
    if (toks[0] != "term" || toks.size() != vars.size() + 2)
      throw ParseError("line " + std::to_string(line_no) + ": malformed term line");
    MultiPoly::Exponents e(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) e[v] = parse_exponent(toks[v + 1], line_no);
    Integer c = parse_coefficient(toks.back(), line_no);
    if (c == 0) throw ParseError("line " + std::to_string(line_no) + ": zero coefficient");
    auto key = probe.make_key(e);
    if (last && key <= *last)
      throw ParseError("line " + std::to_string(line_no) + ": terms not strictly sorted");
    last = key;
    terms.emplace_back(std::move(e), std::move(c));
  }
  return MultiPoly::from_terms(vars, terms);
}

MultiPoly parse_apoly(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_apoly(is);
}

}  // namespace tbk
