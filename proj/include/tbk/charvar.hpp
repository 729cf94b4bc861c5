#pragma once

/**
 * @file charvar.hpp
 * @brief Character-variety computations for two-bridge knots.
 *
 * The knot group is <a, b | a w = w b> with w = b^e1 a^e2 b^e3 ... a^e(q-1),
 * ei = (-1)^floor(i p'/q), where p' is the odd one of p and p - q. Nonabelian
 * representations are conjugate to
 *
 *   a -> [[M, 1], [0, 1/M]],   b -> [[M, 0], [-u, 1/M]],
 *
 * and the relation holds exactly on the zero set of the Riley polynomial in
 * (M, u). The longitude w w* a^(-2 sum ei) (w* is w spelled backwards) is upper
 * triangular there with eigenvalue L, and eliminating u gives the
 * A-polynomial in (L, M).
 */

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tbk/multipoly.hpp"
#include "tbk/rational.hpp"

namespace tbk {

/// Variable order (L, M, u) shared by every polynomial in this module.
const VarSet& charvar_vars();
/// (L, M): the variables of A-polynomials and of the `# apoly v1` files.
const VarSet& apoly_vars();

struct TwoBridgePresentation {
  Rational fraction;
  std::vector<int> epsilons;  // length q - 1, palindromic

  /// Relator word w as (generator, exponent) letters; generator 0 is a.
  std::vector<std::pair<int, int>> relator_word() const;
  /// Longitude word commuting with a.
  std::vector<std::pair<int, int>> longitude_word() const;
};

TwoBridgePresentation presentation(const Rational& p_over_q);

/// Generator of the relation ideal in Z[M, u]: primitive, with monomial
/// factors removed and positive leading coefficient. Its degree in u is
/// (q - 1)/2. Throws ComputationError if the relation entries share no
/// factor.
MultiPoly riley_polynomial(const TwoBridgePresentation& pres);

/// M^k times the (1,1) entry of the longitude image, as a polynomial in
/// (M, u); `k` receives the M-power that was cleared.
MultiPoly longitude_eigenvalue(const TwoBridgePresentation& pres, std::uint32_t& k);

enum class ComponentTag { full, canonical, other, abelian };
std::string to_string(ComponentTag tag);

struct APoly {
  MultiPoly poly;  // over apoly_vars()
  ComponentTag tag = ComponentTag::full;
};

struct APolyOptions {
  bool keep_abelian = false;  // include the factor L - 1
  bool split = false;         // separate components
};

struct APolyResult {
  APoly full;
  /// Populated when a split was requested and succeeded.
  std::vector<APoly> components;
  /// Multiplicity of each component's factor in the eliminant.
  std::vector<unsigned> multiplicities;
  std::string note;
};

/// Eliminates u between the Riley polynomial and L - (longitude eigenvalue),
/// then removes monomial factors, integer content and repeated factors.
///
/// Splitting uses the squarefree decomposition of the eliminant: factors of
/// different multiplicity belong to different components. A factor is tagged
/// canonical when it is the only one whose Newton-polygon slopes are all
/// symmetric boundary slopes.
APolyResult a_polynomial(const Rational& p_over_q, const APolyOptions& options = {});

struct LatticePoint {
  std::int64_t l = 0;  // exponent of L
  std::int64_t m = 0;  // exponent of M
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct NewtonPolygon {
  std::vector<LatticePoint> corners;  // counterclockwise, no collinear triples
};

/// Convex hull of the support. Corners start at the lexicographically
/// smallest point. The polynomial may only involve L and M.
NewtonPolygon newton_polygon(const MultiPoly& poly);
NewtonPolygon newton_polygon_of_points(std::vector<LatticePoint> points);

struct SlopeConvention {
  enum class Axis { lm, ml };
  Axis axis = Axis::lm;  // lm: slope = dM/dL, ml: slope = dL/dM
  bool negate = false;
  bool half = false;
  friend bool operator==(const SlopeConvention&, const SlopeConvention&) = default;
  std::string to_string() const;
};

/// The convention selected by calibrate_slope_convention(), frozen.
inline constexpr SlopeConvention kCalibratedConvention{SlopeConvention::Axis::lm, false, false};

std::set<Slope> edge_slopes(const NewtonPolygon& np, const SlopeConvention& convention = kCalibratedConvention);

/// Tries every convention and keeps the one whose polygon slopes (A-polynomial
/// with the abelian factor) equal the boundary-slope sets of the figure-eight
/// knot (2/5, slopes -4, 0, 4) and the trefoil (1/3, slopes 0, 6). Throws
/// ComputationError unless exactly one convention fits.
SlopeConvention calibrate_slope_convention();

}  // namespace tbk
