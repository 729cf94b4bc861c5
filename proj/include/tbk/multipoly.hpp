#pragma once

/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials with arbitrary-precision integer
 * coefficients.
 *
 * Terms are kept sorted by exponent vector in lexicographic order (first
 * variable most significant) with no stored zero coefficients. Exponent
 * vectors are packed 16 bits per variable into a 64-bit key, which limits a
 * polynomial to four variables and per-variable degree 65535. Both limits are
 * checked.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tbk/rational.hpp"

namespace tbk {

/// Ordered variable names shared between polynomials. Copies are cheap.
class VarSet {
 public:
  VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
  VarSet(std::initializer_list<std::string> names);
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  /// Index of `name`, or nullopt when absent.
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

class MultiPoly {
 public:
  static constexpr std::size_t kMaxVars = 4;
  static constexpr unsigned kBitsPerVar = 16;
  static constexpr std::uint32_t kMaxDegree = (1u << kBitsPerVar) - 1;

  using Key = std::uint64_t;
  using Exponents = std::vector<std::uint32_t>;

  struct Term {
    Key key;
    Integer coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(VarSet vars);

  static MultiPoly constant(const VarSet& vars, const Integer& c);
  static MultiPoly variable(const VarSet& vars, std::string_view name);
  static MultiPoly monomial(const VarSet& vars, std::span<const std::uint32_t> exps,
                            const Integer& coeff);
  /// Builds from (exponents, coefficient) pairs; repeated exponents are summed.
  static MultiPoly from_terms(const VarSet& vars,
                              const std::vector<std::pair<Exponents, Integer>>& terms);

  const VarSet& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient of a constant polynomial (0 for zero).
  Integer constant_value() const;

  std::uint32_t exponent(Key key, std::size_t var) const;
  Exponents exponents(Key key) const;
  Key make_key(std::span<const std::uint32_t> exps) const;

  /// Coefficient of the given exponent vector (0 when absent).
  Integer coefficient(std::span<const std::uint32_t> exps) const;

  /// Highest power of `var` present; -1 for the zero polynomial.
  int degree(std::size_t var) const;
  int degree(std::string_view var) const { return degree(vars_.index_of(var)); }
  /// Lowest power of `var` present; -1 for the zero polynomial.
  int min_degree(std::size_t var) const;

  /// Lexicographically largest term.
  const Term& leading_term() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Integer& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
  friend MultiPoly operator*(const Integer& c, MultiPoly a) { return a *= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(std::size_t var) const;
  /// Substitutes an integer value for `var`; the variable stays in the set
  /// with exponent 0.
  MultiPoly evaluate(std::size_t var, const Integer& value) const;
  /// Multiplies by var^shift.
  MultiPoly shifted(std::size_t var, std::uint32_t shift) const;

  /// Dense coefficient list in `var`: result[k] is the coefficient of var^k.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(const VarSet& vars, std::size_t var,
                                     const std::vector<MultiPoly>& coeffs);

  /// Re-expresses the polynomial over another variable set containing every
  /// variable that actually occurs.
  MultiPoly with_vars(const VarSet& target) const;

  /// Integer gcd of the coefficients (positive); throws on zero.
  Integer integer_content() const;
  /// Divides out the smallest power of every variable; returns the exponents
  /// removed.
  std::pair<MultiPoly, Exponents> strip_monomial() const;
  /// Same polynomial with positive leading coefficient.
  MultiPoly normalized_sign() const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& other) const;
  void add_scaled(const MultiPoly& rhs, int sign);

  VarSet vars_;
  std::vector<Term> terms_;  // ascending by key, nonzero coefficients
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Exact quotient f / g; throws ComputationError when g does not divide f.
MultiPoly divexact(const MultiPoly& f, const MultiPoly& g);
/// Exact quotient when g divides f, nullopt otherwise.
std::optional<MultiPoly> try_divexact(const MultiPoly& f, const MultiPoly& g);

/// lc(g)^(deg f - deg g + 1) * f reduced modulo g, with respect to `var`.
MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// Greatest common divisor over the integers, normalized to positive leading
/// coefficient. gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

/// gcd of the coefficients of f viewed as a polynomial in `var`.
MultiPoly content_in(const MultiPoly& f, std::size_t var);

enum class CleanupMode { content, primitive_part, squarefree_part };

/// content: integer content as a constant polynomial. primitive_part: f divided
/// by that content. squarefree_part: the primitive product of the distinct
/// irreducible factors of f (sign normalized). Zero input throws.
MultiPoly poly_cleanup(const MultiPoly& f, CleanupMode mode);

/// Factors of f grouped by multiplicity: f = c * prod(factor^multiplicity).
/// Each factor is primitive with positive leading coefficient and the factors
/// are pairwise coprime. The integer content is dropped.
std::vector<std::pair<MultiPoly, unsigned>> squarefree_decomposition(const MultiPoly& f);

/// Resultant with respect to `var` via the subresultant remainder sequence.
/// Throws InvalidArgument when `var` occurs in neither input.
MultiPoly poly_resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var);
MultiPoly resultant_subresultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);
/// Resultant as the Sylvester determinant, evaluated by fraction-free
/// (Bareiss) elimination.
MultiPoly resultant_sylvester(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// Determinant of a square matrix of polynomials by Bareiss elimination.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

}  // namespace tbk
