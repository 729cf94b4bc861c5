#include "tbk/continued_fraction.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "tbk/errors.hpp"

namespace tbk {

namespace {

Entry to_entry(const Integer& z) {
  if (!z.fits_slong_p()) throw InvalidArgument("continued fraction entry out of range");
  return z.get_si();
}

bool is_even(const Integer& z) { return mpz_even_p(z.get_mpz_t()) != 0; }

}  // namespace

bool ContinuedFraction::admissible() const {
  return std::all_of(entries.begin(), entries.end(), [](Entry a) { return a >= 2 || a <= -2; });
}

std::string ContinuedFraction::to_string() const {
  std::string s;
  if (integer_part != 0) s = std::to_string(integer_part) + "+";
  s += "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + "]";
}

Rational evaluate(const ContinuedFraction& cf) {
  Rational r(static_cast<long>(cf.integer_part));
  if (cf.entries.empty()) return r;
  Rational tail(static_cast<long>(cf.entries.back()));
  for (std::size_t i = cf.entries.size() - 1; i-- > 0;) {
    if (tail.is_zero()) throw DivisionByZero("continued fraction has a vanishing partial tail");
    tail = Rational(static_cast<long>(cf.entries[i])) + tail.reciprocal();
  }
  if (tail.is_zero()) throw DivisionByZero("continued fraction has a vanishing partial tail");
  return r + tail.reciprocal();
}

Rational evaluate_with_tail(std::span<const Entry> entries, const Rational& x) {
  Rational tail = x;
  for (std::size_t i = entries.size(); i-- > 0;) {
    if (tail.is_zero()) throw DivisionByZero("continued fraction has a vanishing partial tail");
    tail = Rational(static_cast<long>(entries[i])) + tail.reciprocal();
  }
  if (tail.is_zero()) throw DivisionByZero("continued fraction has a vanishing partial tail");
  return tail.reciprocal();
}

ContinuedFraction negate(const ContinuedFraction& cf) {
  ContinuedFraction out{-cf.integer_part, cf.entries};
  for (auto& a : out.entries) a = -a;
  return out;
}

std::vector<Entry> expand_repetition(std::span<const Entry> pattern, std::size_t k) {
  std::vector<Entry> out;
  out.reserve(pattern.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), pattern.begin(), pattern.end());
  return out;
}

void require_two_bridge_fraction(const Rational& p_over_q) {
  if (p_over_q <= Rational(0) || p_over_q >= Rational(1))
    throw InvalidArgument("two-bridge fraction must satisfy 0 < p/q < 1, got " + p_over_q.to_string());
  if (is_even(p_over_q.denominator()))
    throw InvalidArgument("two-bridge knot fraction needs odd q, got " + p_over_q.to_string());
}

namespace {

// Expansions of x in (-1, 1) \ {0}. The head entry a satisfies |1/x - a| < 1
// and the tail value 1/x - a has strictly smaller numerator than x in
// absolute value, so the recursion terminates.
void expand_admissible(const Rational& x, std::vector<Entry>& prefix,
                       std::vector<std::vector<Entry>>& out) {
  const Rational y = x.reciprocal();
  const Integer lo = y.floor();
  const Integer hi = y.ceil();
  for (Integer a = lo; a <= hi; ++a) {
    if (abs(a) < 2) continue;
    const Rational t = y - Rational(a);
    prefix.push_back(to_entry(a));
    if (t.is_zero())
      out.push_back(prefix);
    else if (t.abs() < Rational(1))
      expand_admissible(t, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Expansion> enumerate_admissible(const Rational& p_over_q) {
  require_two_bridge_fraction(p_over_q);
  std::vector<Expansion> out;
  for (const Rational& rep : {p_over_q, p_over_q - Rational(1)}) {
    std::vector<std::vector<Entry>> found;
    std::vector<Entry> prefix;
    expand_admissible(rep, prefix, found);
    for (auto& e : found) out.push_back({ContinuedFraction{0, std::move(e)}, rep});
  }
  std::sort(out.begin(), out.end(), [](const Expansion& a, const Expansion& b) { return a.cf < b.cf; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Greedy all-even expansion of a single representative; nullopt when some
// step meets an odd integer reciprocal (no even entry within distance < 1).
std::optional<std::vector<Entry>> greedy_even(Rational x) {
  std::vector<Entry> entries;
  while (true) {
    const Rational y = x.reciprocal();
    Integer a = y.floor();
    if (y.is_integer()) {
      if (!is_even(a)) return std::nullopt;
      entries.push_back(to_entry(a));
      return entries;
    }
    if (!is_even(a)) a += 1;
    entries.push_back(to_entry(a));
    x = y - Rational(a);
  }
}

}  // namespace

ContinuedFraction all_even_expansion(const Rational& p_over_q) {
  require_two_bridge_fraction(p_over_q);
  std::optional<ContinuedFraction> found;
  for (const Rational& rep : {p_over_q, p_over_q - Rational(1)}) {
    auto e = greedy_even(rep);
    if (!e) continue;
    if (found) throw ComputationError("two all-even expansions for " + p_over_q.to_string());
    const Entry offset = to_entry((p_over_q - rep).floor());
    found = ContinuedFraction{offset, std::move(*e)};
  }
  if (!found) throw ComputationError("no all-even expansion for " + p_over_q.to_string());
  return *found;
}

ContinuedFraction all_positive_expansion(const Rational& x) {
  if (x <= Rational(0) || x >= Rational(1))
    throw InvalidArgument("all-positive expansion needs 0 < x < 1, got " + x.to_string());
  ContinuedFraction cf;
  Rational t = x;
  while (!t.is_zero()) {
    const Rational y = t.reciprocal();
    const Integer a = y.floor();
    cf.entries.push_back(to_entry(a));
    t = y - Rational(a);
  }
  return cf;
}

namespace {

class CfParser {
 public:
  explicit CfParser(std::string text) : s_(std::move(text)) {}

  ContinuedFraction parse() {
    skip_ws();
    expect('[');
    ContinuedFraction cf;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
    } else {
      parse_list(cf.entries, ']');
    }
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return cf;
  }

 private:
  void parse_list(std::vector<Entry>& out, char close) {
    while (true) {
      skip_ws();
      if (peek() == '(') {
        ++pos_;
        std::vector<Entry> group;
        parse_list(group, ')');
        skip_ws();
        expect('_');
        skip_ws();
        const long long k = parse_int();
        if (k < 0) fail("negative repetition count");
        auto rep = expand_repetition(group, static_cast<std::size_t>(k));
        out.insert(out.end(), rep.begin(), rep.end());
      } else {
        const long long a = parse_int();
        if (a == 0) fail("continued fraction entries must be nonzero");
        out.push_back(a);
      }
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(close);
      return;
    }
  }

  long long parse_int() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 17) fail("integer too large");
    long long v = std::stoll(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("continued fraction '" + s_ + "': " + msg + " at offset " + std::to_string(pos_));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string normalize_minus(std::string_view text) {
  // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace

ContinuedFraction parse_continued_fraction(std::string_view text) {
  return CfParser(normalize_minus(text)).parse();
}

}  // namespace tbk
