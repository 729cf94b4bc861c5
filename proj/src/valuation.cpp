#include "tbk/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "tbk/errors.hpp"

namespace tbk {

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::t_power(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int UPoly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.c_;
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational& lead = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = r[k + b.c_.size() - 1] / lead;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= c * b.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  const Rational lead = leading();
  for (auto& x : r.c_) x /= lead;
  return r;
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    if (i == 0) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    auto r = UPoly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// ValuedElement

ValuedElement::ValuedElement(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  UPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UPoly::divmod(num_, g).first;
    den_ = UPoly::divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    num_ = num_ * UPoly(lead.reciprocal());
    den_ = den_.monic();
  }
}

ValuedElement operator+(const ValuedElement& a, const ValuedElement& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

ValuedElement operator*(const ValuedElement& a, const ValuedElement& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

ValuedElement operator/(const ValuedElement& a, const ValuedElement& b) {
  if (b.is_zero()) throw DivisionByZero();
  return {a.num_ * b.den_, a.den_ * b.num_};
}

ValuedElement ValuedElement::pow(int e) const {
  ValuedElement base = e < 0 ? ValuedElement(Rational(1)) / *this : *this;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  ValuedElement r(Rational(1));
  while (n > 0) {
    if (n & 1u) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

std::string ValuedElement::to_string() const {
  if (den_ == UPoly(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  ValuedElement parse() {
    ValuedElement v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  ValuedElement expr() {
    ValuedElement v = term();
    while (true) {
      skip();
      if (accept('+'))
        v = v + term();
      else if (accept('-'))
        v = v - term();
      else
        return v;
    }
  }

  ValuedElement term() {
    ValuedElement v = unary();
    while (true) {
      skip();
      if (accept('*'))
        v = v * unary();
      else if (accept('/'))
        v = v / unary();
      else
        return v;
    }
  }

  ValuedElement unary() {
    skip();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ValuedElement power() {
    ValuedElement base = primary();
    skip();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      skip();
      Integer e = digits();
      if (!e.fits_sint_p() || e > 10000) fail("exponent too large");
      int k = static_cast<int>(e.get_si());
      if (base.is_zero() && (neg || k == 0)) fail("0 raised to a non-positive power");
      return base.pow(neg ? -k : k);
    }
    return base;
  }

  ValuedElement primary() {
    skip();
    if (accept('(')) {
      ValuedElement v = expr();
      skip();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (accept('t')) return ValuedElement::t();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return ValuedElement(Rational(digits()));
    fail("expected a number, 't' or '('");
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("rational function '" + std::string(s_) + "': " + msg + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ValuedElement ValuedElement::parse(std::string_view text) {
  try {
    return ExprParser(text).parse();
  } catch (const DivisionByZero&) {
    throw ParseError("rational function '" + std::string(text) + "' divides by zero");
  }
}

Order ord(const ValuedElement& f) {
  if (f.is_zero()) return std::nullopt;
  return static_cast<std::int64_t>(f.numerator().low_order()) - f.denominator().low_order();
}

// ---------------------------------------------------------------------------
// Mat2

Mat2::Mat2(ValuedElement a, ValuedElement b, ValuedElement c, ValuedElement d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  const ValuedElement det = determinant();
  if (!(det == ValuedElement(Rational(1))))
    throw InvalidArgument("matrix determinant is " + det.to_string() + ", expected 1");
}

Mat2 Mat2::identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }

Mat2 Mat2::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::array<ValuedElement, 4> e;
  std::string tok;
  for (auto& x : e) {
    if (!(is >> tok)) throw ParseError("matrix needs four entries: '" + std::string(text) + "'");
    x = ValuedElement::parse(tok);
  }
  if (is >> tok) throw ParseError("matrix has more than four entries: '" + std::string(text) + "'");
  return {e[0], e[1], e[2], e[3]};
}

Mat2 Mat2::inverse() const { return Mat2(Unchecked{}, {e_[3], -e_[1], -e_[2], e_[0]}); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2(Mat2::Unchecked{}, {x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                                  x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]});
}

bool fixes_vertex(const Mat2& a) {
  Order o = ord(a.trace());
  return !o || *o >= 0;
}

std::int64_t translation_length(const Mat2& a) {
  Order o = ord(a.trace());
  if (!o) return 0;
  return std::max<std::int64_t>(0, -2 * *o);
}

std::optional<Certificate> nontriviality_certificate(const std::vector<Mat2>& generators,
                                                     std::size_t max_length) {
  struct Node {
    std::vector<WordLetter> word;
    Mat2 value;
  };
  std::vector<Mat2> inverses;
  for (const auto& g : generators) inverses.push_back(g.inverse());

  std::vector<Node> frontier{{{}, Mat2::identity()}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (std::size_t i = 0; i < generators.size(); ++i) {
        for (bool inv : {false, true}) {
          if (!node.word.empty() && node.word.back().generator == i && node.word.back().inverse != inv)
            continue;
          Node child{node.word, node.value * (inv ? inverses[i] : generators[i])};
          child.word.push_back({i, inv});
          Order o = ord(child.value.trace());
          if (o && *o < 0) return Certificate{child.word, *o};
          next.push_back(std::move(child));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

Detection classify_detection(std::int64_t v_meridian, std::int64_t v_longitude) {
  if (v_meridian == 0 && v_longitude == 0) return Weak{};
  return Strict{Slope(Integer(static_cast<long>(-v_longitude)), Integer(static_cast<long>(v_meridian)))};
}

}  // namespace tbk
