#pragma once

/**
 * @file ideal_points.hpp
 * @brief Ideal points of two-bridge character varieties counted through
 * residue tuples.
 *
 * For an admissible expansion [n1, ..., nN] the ideal points attached to it
 * are the classes of tuples (k1, ..., kN), 0 < ki < |ni|, not all equal to
 * |ni|/2, under the group generated by (kj) -> (-kj) and
 * (kj) -> ((-1)^j kj).
 */

#include <cstdint>
#include <map>
#include <vector>

#include "tbk/continued_fraction.hpp"

namespace tbk {

/// Which positions the alternating negation flips. With 1-based positions j,
/// ((-1)^j kj) negates the odd ones.
enum class AlternationIndexing { negate_odd_positions, negate_even_positions };

struct IdealPointClass {
  std::vector<std::int64_t> residues;  // lexicographic minimum of its orbit

  friend auto operator<=>(const IdealPointClass&, const IdealPointClass&) = default;
};

/// Canonical representatives, sorted. Throws InvalidArgument for a
/// non-admissible expansion.
std::vector<IdealPointClass> ideal_point_classes(
    const ContinuedFraction& expansion,
    AlternationIndexing indexing = AlternationIndexing::negate_odd_positions);

/// Number of classes counted by sweeping orbits rather than by canonical
/// representatives.
std::uint64_t count_ideal_points_by_orbits(
    const ContinuedFraction& expansion,
    AlternationIndexing indexing = AlternationIndexing::negate_odd_positions);

/// Orbit sizes of the sign group action, one entry per class.
std::vector<std::size_t> ideal_point_orbit_sizes(
    const ContinuedFraction& expansion,
    AlternationIndexing indexing = AlternationIndexing::negate_odd_positions);

/// Total ideal-point count per boundary slope over all admissible expansions.
/// Every slope that occurs is a key, even when its count is zero.
std::map<std::int64_t, std::uint64_t> detected_slopes_with_counts(const Rational& p_over_q);

}  // namespace tbk
