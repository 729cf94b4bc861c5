#include "tbk/surfaces.hpp"

#include <algorithm>
#include <set>

#include "tbk/errors.hpp"
#include "tbk/ideal_points.hpp"

namespace tbk {

BranchedSurface make_surface(ContinuedFraction expansion, const Rational& knot_fraction) {
  require_two_bridge_fraction(knot_fraction);
  if (!expansion.admissible())
    throw InvalidArgument("branched surface needs an admissible expansion, got " + expansion.to_string());
  expansion.integer_part = 0;
  if (expansion.entries.empty() || evaluate(expansion).frac() != knot_fraction)
    throw InvalidArgument(expansion.to_string() + " does not expand " + knot_fraction.to_string());
  return {std::move(expansion), knot_fraction};
}

std::vector<Entry> alternate_signs(std::span<const Entry> entries) {
  std::vector<Entry> out(entries.begin(), entries.end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

namespace {

std::int64_t signed_count(std::span<const Entry> entries) {
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  for (Entry a : alternate_signs(entries)) (a > 0 ? plus : minus) += 1;
  return plus - minus;
}

}  // namespace

std::int64_t boundary_slope(const BranchedSurface& surface) {
  const ContinuedFraction even = all_even_expansion(surface.knot_fraction);
  return 2 * (signed_count(surface.expansion.entries) - signed_count(even.entries));
}

BranchedSurface flip(const BranchedSurface& surface) {
  ContinuedFraction reversed{0, {surface.expansion.entries.rbegin(), surface.expansion.entries.rend()}};
  if (reversed.entries.size() % 2 == 0) reversed = negate(reversed);
  const Rational fraction = evaluate(reversed).frac();
  return {std::move(reversed), fraction};
}

bool is_symmetric(const BranchedSurface& surface) {
  return flip(surface).expansion.entries == surface.expansion.entries;
}

std::vector<std::int64_t> SlopeReport::all_slopes() const {
  std::set<std::int64_t> s;
  for (const auto& d : data) s.insert(d.slope);
  return {s.begin(), s.end()};
}

std::vector<std::int64_t> SlopeReport::symmetric_slopes() const {
  std::set<std::int64_t> s;
  for (const auto& d : data)
    if (d.symmetric) s.insert(d.slope);
  return {s.begin(), s.end()};
}

SlopeReport slope_report(const Rational& p_over_q) {
  SlopeReport report{p_over_q, {}};
  for (const auto& e : enumerate_admissible(p_over_q)) {
    BranchedSurface surface = make_surface(e.cf, p_over_q);
    SlopeDatum d;
    d.slope = boundary_slope(surface);
    d.symmetric = is_symmetric(surface);
    d.ideal_point_count = ideal_point_classes(surface.expansion).size();
    d.expansion = std::move(surface.expansion);
    d.representative = e.representative;
    report.data.push_back(std::move(d));
  }
  return report;
}

}  // namespace tbk
