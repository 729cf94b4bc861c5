#pragma once

// Boundary slopes of the branched surfaces carried by admissible expansions,
// and the flip symmetry that turns the 4-plat upside down.

#include <cstdint>
#include <span>
#include <vector>

#include "tbk/continued_fraction.hpp"

namespace tbk {

struct BranchedSurface {
  ContinuedFraction expansion;  // admissible, integer part 0
  Rational knot_fraction;       // p/q in (0, 1)

  friend bool operator==(const BranchedSurface&, const BranchedSurface&) = default;
};

/// Validates admissibility and that the expansion evaluates to the knot
/// fraction modulo Z. The stored expansion has integer part 0.
BranchedSurface make_surface(ContinuedFraction expansion, const Rational& knot_fraction);

/// [a1, -a2, a3, -a4, ...]
std::vector<Entry> alternate_signs(std::span<const Entry> entries);

/// 2((n+ - n-) - (n0+ - n0-)), where n+/n- count the positive/negative terms of
/// alternate_signs(expansion) and n0+/n0- those of the alternated all-even
/// expansion of the knot fraction.
std::int64_t boundary_slope(const BranchedSurface& surface);

/// (-1)^(s+1) Sigma[as, ..., a1], with -Sigma[c] read as Sigma[-c]. The result
/// is attached to the fraction its expansion evaluates to (mod Z).
BranchedSurface flip(const BranchedSurface& surface);

bool is_symmetric(const BranchedSurface& surface);

struct SlopeDatum {
  std::int64_t slope = 0;
  ContinuedFraction expansion;
  Rational representative;
  bool symmetric = false;
  std::uint64_t ideal_point_count = 0;

  friend bool operator==(const SlopeDatum&, const SlopeDatum&) = default;
};

struct SlopeReport {
  Rational fraction;
  std::vector<SlopeDatum> data;  // one per admissible expansion, enumeration order

  /// Distinct slopes, ascending.
  std::vector<std::int64_t> all_slopes() const;
  /// Distinct slopes carried by a symmetric expansion, ascending.
  std::vector<std::int64_t> symmetric_slopes() const;
};

SlopeReport slope_report(const Rational& p_over_q);

}  // namespace tbk
