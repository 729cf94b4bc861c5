#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over GMP integers.
 *
 * The value is always stored in canonical form: positive denominator and
 * coprime numerator/denominator, so zero is uniquely 0/1 and equality is
 * member-wise.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tbk {

using Integer = mpz_class;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design of arithmetic
  Rational(int n) : num_(n), den_(1) {}   // NOLINT
  Rational(const Integer& n) : num_(n), den_(1) {}  // NOLINT
  Rational(Integer n, Integer d);

  /// Parses "a", "-a" or "a/b".
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Integer floor() const;
  Integer ceil() const;
  Rational abs() const;
  /// The representative of this value modulo 1 in [0, 1).
  Rational frac() const;

  double to_double() const;
  std::string to_string() const;

 private:
  void canonicalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of the four field operations; div by zero throws
/// DivisionByZero.
Rational rational_arithmetic(const Rational& a, const Rational& b, ArithOp op);

/// A boundary slope p/q in lowest terms with q >= 0; 1/0 is the vertical
/// (infinite) slope.
class Slope {
 public:
  Slope() = default;
  Slope(Integer p, Integer q);
  explicit Slope(const Rational& r) : Slope(r.numerator(), r.denominator()) {}
  static Slope infinity() { return Slope(1, 0); }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  Rational to_rational() const;

  friend bool operator==(const Slope& a, const Slope& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  /// Finite slopes in numeric order, infinity last.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

  std::string to_string() const;

 private:
  Integer p_{0};
  Integer q_{1};
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

}  // namespace tbk
