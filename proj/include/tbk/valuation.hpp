#pragma once

/**
 * @file valuation.hpp
 * @brief Order-of-vanishing valuation on Q(t) at t = 0 and the resulting
 * diagnostics for SL2(Q(t)) acting on its Bass-Serre tree.
 *
 * An element A fixes a vertex exactly when ord(tr A) >= 0; a generating set
 * with some element of negative trace valuation acts non-trivially.
 */

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tbk/rational.hpp"

namespace tbk {

/// Dense univariate polynomial over Q, coefficient i multiplies t^i. No
/// trailing zero coefficients.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly t_power(std::size_t k, const Rational& c = Rational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int low_order() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Euclidean division; throws DivisionByZero for b = 0.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  UPoly monic() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// A ratio of polynomials in t in lowest terms with monic denominator.
class ValuedElement {
 public:
  ValuedElement() : num_(), den_(Rational(1)) {}
  ValuedElement(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  ValuedElement(UPoly num, UPoly den);

  static ValuedElement t() { return {UPoly::t_power(1), UPoly(Rational(1))}; }
  /// Parses expressions in t with + - * / ^, integer literals and
  /// parentheses, e.g. "t^2/(1+t)" or "-3/2*t + 1".
  static ValuedElement parse(std::string_view text);

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  ValuedElement operator-() const { return {-num_, den_}; }
  friend ValuedElement operator+(const ValuedElement& a, const ValuedElement& b);
  friend ValuedElement operator-(const ValuedElement& a, const ValuedElement& b) { return a + (-b); }
  friend ValuedElement operator*(const ValuedElement& a, const ValuedElement& b);
  friend ValuedElement operator/(const ValuedElement& a, const ValuedElement& b);
  friend bool operator==(const ValuedElement&, const ValuedElement&) = default;

  ValuedElement pow(int e) const;
  std::string to_string() const;

 private:
  UPoly num_;
  UPoly den_;
};

/// Order of vanishing at t = 0: nullopt stands for +infinity (the zero element).
using Order = std::optional<std::int64_t>;
Order ord(const ValuedElement& f);

/// 2x2 matrix over Q(t) with determinant exactly 1.
class Mat2 {
 public:
  /// Throws InvalidArgument unless ad - bc = 1.
  Mat2(ValuedElement a, ValuedElement b, ValuedElement c, ValuedElement d);
  static Mat2 identity();
  /// Parses four whitespace-separated entries in row-major order.
  static Mat2 parse(std::string_view text);

  const ValuedElement& operator()(int row, int col) const { return e_[static_cast<std::size_t>(2 * row + col)]; }
  ValuedElement trace() const { return e_[0] + e_[3]; }
  ValuedElement determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Mat2 inverse() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  struct Unchecked {};
  Mat2(Unchecked, std::array<ValuedElement, 4> e) : e_(std::move(e)) {}
  std::array<ValuedElement, 4> e_;
};

/// ord(tr A) >= 0.
bool fixes_vertex(const Mat2& a);

/// Translation length on the tree, max(0, -2 ord(tr A)).
std::int64_t translation_length(const Mat2& a);

struct WordLetter {
  std::size_t generator;
  bool inverse;
  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

struct Certificate {
  std::vector<WordLetter> word;
  std::int64_t trace_order;  // negative
};

/// Breadth-first search, shortest words first, over freely reduced words in
/// the generators and their inverses up to `max_length`, for an element whose
/// trace has negative valuation.
std::optional<Certificate> nontriviality_certificate(const std::vector<Mat2>& generators,
                                                     std::size_t max_length = 3);

struct Weak {
  friend bool operator==(const Weak&, const Weak&) = default;
};
struct Strict {
  Slope slope;
  friend bool operator==(const Strict&, const Strict&) = default;
};
using Detection = std::variant<Strict, Weak>;

/// Given the valuations of the meridian and longitude eigenvalue functions,
/// (0, 0) is weak detection (closed surface); otherwise the unique primitive
/// p/q with p vM + q vL = 0 is the strictly detected slope.
Detection classify_detection(std::int64_t v_meridian, std::int64_t v_longitude);

}  // namespace tbk
