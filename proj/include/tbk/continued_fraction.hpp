#pragma once

/**
 * @file continued_fraction.hpp
 * @brief Signed-entry continued fractions r + [a1, ..., as] and the
 * enumeration of admissible (|ai| >= 2) expansions of a two-bridge fraction.
 *
 * [a1, ..., as] denotes 1/(a1 + 1/(a2 + ... + 1/as)); the empty expansion
 * has value 0, so r + [] = r.
 */

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbk/rational.hpp"

namespace tbk {

using Entry = std::int64_t;

struct ContinuedFraction {
  Entry integer_part = 0;
  std::vector<Entry> entries;

  bool admissible() const;
  std::size_t length() const { return entries.size(); }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
  /// Lexicographic on entries, then integer part.
  friend auto operator<=>(const ContinuedFraction& a, const ContinuedFraction& b) {
    if (auto c = a.entries <=> b.entries; c != 0) return c;
    return a.integer_part <=> b.integer_part;
  }

  /// Fully expanded bracket form, e.g. "[4,-4]" or "-1+[2,-2]".
  std::string to_string() const;
};

/// Value r + [a1, ..., as]. Throws DivisionByZero when some partial tail
/// a_i + [a_{i+1}, ...] vanishes.
Rational evaluate(const ContinuedFraction& cf);

/// Value of [a1, ..., ak, x] with the rational x as the final entry.
Rational evaluate_with_tail(std::span<const Entry> entries, const Rational& x);

ContinuedFraction negate(const ContinuedFraction& cf);

/// `pattern` repeated k times, written (pattern)_k.
std::vector<Entry> expand_repetition(std::span<const Entry> pattern, std::size_t k);

/// An admissible expansion together with the representative of p/q mod Z in
/// (-1, 1) that it evaluates to.
struct Expansion {
  ContinuedFraction cf;
  Rational representative;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

/// Checks 0 < p/q < 1 with q odd (the fraction is already reduced); throws
/// InvalidArgument otherwise.
void require_two_bridge_fraction(const Rational& p_over_q);

/// Every expansion [a1, ..., as] with all |ai| >= 2 whose value is congruent
/// to p/q modulo Z, sorted lexicographically by entries.
std::vector<Expansion> enumerate_admissible(const Rational& p_over_q);

/// The unique expansion with all entries even whose value is congruent to
/// p/q modulo Z. The integer part records the offset so that evaluate()
/// returns p/q itself.
ContinuedFraction all_even_expansion(const Rational& p_over_q);

/// Euclidean expansion of 0 < x < 1 with positive entries, not ending in 1.
ContinuedFraction all_positive_expansion(const Rational& x);

/// Parses "[4,-4]" or "[(-2,2)_3,-3]" (repetition groups expand in place; a
/// Unicode minus sign is accepted). Emits fully expanded entries.
ContinuedFraction parse_continued_fraction(std::string_view text);

}  // namespace tbk
