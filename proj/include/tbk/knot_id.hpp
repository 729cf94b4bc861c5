#pragma once

/**
 * @file knot_id.hpp
 * @brief Two-bridge knot identifiers, their equivalence, and the double twist
 * family J(k, l).
 *
 * K(p, q) and K(p', q') are the same knot exactly when q = q' and
 * p' = p^(+1 or -1) (mod q). Under the mirror-identifying convention the
 * complements q - p are admitted as well, since K(-p, q) is the mirror image.
 */

#include <string>

#include "tbk/rational.hpp"

namespace tbk {

enum class MirrorConvention {
  distinguish,  // chiral: p and p^-1 only
  identify,     // also -p and -p^-1
};

class KnotId {
 public:
  /// Validates 0 < p < q, q odd, gcd(p, q) = 1 and stores the canonical
  /// representative: the least of the admissible residues.
  KnotId(Integer p, Integer q, MirrorConvention convention = MirrorConvention::distinguish);
  explicit KnotId(const Rational& fraction, MirrorConvention convention = MirrorConvention::distinguish)
      : KnotId(fraction.numerator(), fraction.denominator(), convention) {}

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  MirrorConvention convention() const { return convention_; }
  Rational fraction() const { return Rational(p_, q_); }
  std::string to_string() const;

  friend bool operator==(const KnotId&, const KnotId&) = default;

 private:
  Integer p_;
  Integer q_;
  MirrorConvention convention_;
};

/// Canonical residue for p modulo q; throws InvalidArgument for invalid pairs.
Integer canonical_residue(const Integer& p, const Integer& q, MirrorConvention convention);

/// q = q' and p' = p^(+1 or -1) (mod q), on the raw residues.
bool knot_equivalent(const Integer& p, const Integer& q, const Integer& p2, const Integer& q2);
bool knot_equivalent(const KnotId& a, const KnotId& b);

struct DoubleTwistKnot {
  KnotId id;
  /// False for the two-bridge torus knots K(+-1, q).
  bool hyperbolic;
};

/// J(k, l) is the two-bridge knot K(k, |1 - k l|), reduced modulo q and
/// canonicalized. Throws InvalidArgument when k l is odd (a two-component
/// link) or when |1 - k l| = 1 (the unknot).
DoubleTwistKnot double_twist_to_two_bridge(long k, long l,
                                           MirrorConvention convention = MirrorConvention::distinguish);

}  // namespace tbk
