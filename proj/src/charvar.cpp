#include "tbk/charvar.hpp"

#include <algorithm>
#include <array>

#include "tbk/continued_fraction.hpp"
#include "tbk/errors.hpp"
#include "tbk/surfaces.hpp"

namespace tbk {

const VarSet& charvar_vars() {
  static const VarSet vars{"L", "M", "u"};
  return vars;
}

const VarSet& apoly_vars() {
  static const VarSet vars{"L", "M"};
  return vars;
}

namespace {

constexpr std::size_t kL = 0;
constexpr std::size_t kM = 1;
constexpr std::size_t kU = 2;

MultiPoly mono(const Integer& c, std::uint32_t l, std::uint32_t m, std::uint32_t u) {
  const std::array<std::uint32_t, 3> e{l, m, u};
  return MultiPoly::monomial(charvar_vars(), e, c);
}

// 2x2 matrices over Z[L, M, u].
struct PolyMat {
  std::array<MultiPoly, 4> e;

  friend PolyMat operator*(const PolyMat& x, const PolyMat& y) {
    return {{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
             x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
  }
  friend PolyMat operator-(const PolyMat& x, const PolyMat& y) {
    return {{x.e[0] - y.e[0], x.e[1] - y.e[1], x.e[2] - y.e[2], x.e[3] - y.e[3]}};
  }
};

PolyMat identity_mat() {
  MultiPoly zero(charvar_vars());
  return {{mono(1, 0, 0, 0), zero, zero, mono(1, 0, 0, 0)}};
}

// Generator images multiplied by M so that every entry is a polynomial.
PolyMat scaled_generator(int generator, int exponent) {
  MultiPoly zero(charvar_vars());
  if (generator == 0) {
    if (exponent > 0) return {{mono(1, 0, 2, 0), mono(1, 0, 1, 0), zero, mono(1, 0, 0, 0)}};
    return {{mono(1, 0, 0, 0), mono(-1, 0, 1, 0), zero, mono(1, 0, 2, 0)}};
  }
  if (exponent > 0) return {{mono(1, 0, 2, 0), zero, mono(-1, 0, 1, 1), mono(1, 0, 0, 0)}};
  return {{mono(1, 0, 0, 0), zero, mono(1, 0, 1, 1), mono(1, 0, 2, 0)}};
}

PolyMat word_image(const std::vector<std::pair<int, int>>& word) {
  PolyMat x = identity_mat();
  for (const auto& [g, e] : word) x = x * scaled_generator(g, e);
  return x;
}

MultiPoly tidy(const MultiPoly& f) {
  auto stripped = f.strip_monomial().first;
  return poly_cleanup(stripped, CleanupMode::primitive_part).normalized_sign();
}

}  // namespace

std::vector<std::pair<int, int>> TwoBridgePresentation::relator_word() const {
  std::vector<std::pair<int, int>> w;
  for (std::size_t i = 0; i < epsilons.size(); ++i) w.emplace_back(i % 2 == 0 ? 1 : 0, epsilons[i]);
  return w;
}

std::vector<std::pair<int, int>> TwoBridgePresentation::longitude_word() const {
  auto w = relator_word();
  std::vector<std::pair<int, int>> out = w;
  out.insert(out.end(), w.rbegin(), w.rend());
  int sigma = 0;
  for (int e : epsilons) sigma += e;
  for (int i = 0; i < 2 * std::abs(sigma); ++i) out.emplace_back(0, sigma > 0 ? -1 : 1);
  return out;
}

TwoBridgePresentation presentation(const Rational& p_over_q) {
  require_two_bridge_fraction(p_over_q);
  const Integer& q = p_over_q.denominator();
  Integer p = p_over_q.numerator();
  if (mpz_even_p(p.get_mpz_t())) p -= q;
  TwoBridgePresentation pres{p_over_q, {}};
  if (!q.fits_slong_p() || q > 1'000'000) throw InvalidArgument("denominator too large");
  const long qq = q.get_si();
  for (long i = 1; i < qq; ++i) {
    Integer fl;
    Integer num = p * i;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    pres.epsilons.push_back(mpz_even_p(fl.get_mpz_t()) ? 1 : -1);
  }
  return pres;
}

MultiPoly riley_polynomial(const TwoBridgePresentation& pres) {
  const PolyMat w = word_image(pres.relator_word());
  const PolyMat rel = scaled_generator(0, 1) * w - w * scaled_generator(1, 1);
  MultiPoly g(charvar_vars());
  for (const auto& entry : rel.e)
    if (!entry.is_zero()) g = gcd(g, entry);
  if (g.is_zero() || g.degree(kU) <= 0)
    throw ComputationError("relation entries for " + pres.fraction.to_string() + " share no factor in u");
  return tidy(g);
}

MultiPoly longitude_eigenvalue(const TwoBridgePresentation& pres, std::uint32_t& k) {
  const auto word = pres.longitude_word();
  k = static_cast<std::uint32_t>(word.size());
  return word_image(word).e[0];
}

std::string to_string(ComponentTag tag) {
  switch (tag) {
    case ComponentTag::full: return "full";
    case ComponentTag::canonical: return "canonical";
    case ComponentTag::other: return "other";
    case ComponentTag::abelian: return "abelian";
  }
  return "unknown";
}

namespace {

std::set<Slope> symmetric_slope_set(const Rational& p_over_q) {
  std::set<Slope> out;
  for (auto s : slope_report(p_over_q).symmetric_slopes()) out.insert(Slope(Integer(static_cast<long>(s)), 1));
  return out;
}

}  // namespace

APolyResult a_polynomial(const Rational& p_over_q, const APolyOptions& options) {
  const TwoBridgePresentation pres = presentation(p_over_q);
  const MultiPoly riley = riley_polynomial(pres);
  std::uint32_t k = 0;
  const MultiPoly eigen = longitude_eigenvalue(pres, k);

  // L * M^k - (M^k * longitude entry), reduced modulo the Riley polynomial
  // first; the reduction only multiplies by powers of its leading
  // coefficient, which is removed again with the monomial content.
  MultiPoly relation = mono(1, 1, k, 0) - eigen;
  relation = pseudo_remainder(relation, riley, kU);
  MultiPoly eliminant = resultant_subresultant(riley, relation, kU);
  if (eliminant.is_zero()) throw ComputationError("elimination produced zero for " + p_over_q.to_string());
  eliminant = tidy(eliminant.with_vars(apoly_vars()));

  auto groups = squarefree_decomposition(eliminant);
  const MultiPoly abelian = MultiPoly::variable(apoly_vars(), "L") - MultiPoly::constant(apoly_vars(), 1);
  MultiPoly nonabelian = MultiPoly::constant(apoly_vars(), 1);
  for (auto& [factor, mult] : groups) {
    if (auto q = try_divexact(factor, abelian)) factor = *q;
    nonabelian *= factor;
  }
  groups.erase(std::remove_if(groups.begin(), groups.end(), [](const auto& g) { return g.first.is_constant(); }),
               groups.end());

  APolyResult result;
  result.full = {options.keep_abelian ? (nonabelian * abelian).normalized_sign() : nonabelian.normalized_sign(),
                 ComponentTag::full};
  if (!options.split) return result;

  if (groups.size() < 2) {
    result.note = "eliminant has a single multiplicity class; full polynomial returned unsplit";
    return result;
  }
  const auto symmetric = symmetric_slope_set(p_over_q);
  std::vector<std::size_t> symmetric_only;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    auto slopes = edge_slopes(newton_polygon(groups[i].first), kCalibratedConvention);
    if (std::includes(symmetric.begin(), symmetric.end(), slopes.begin(), slopes.end())) symmetric_only.push_back(i);
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const bool canonical = symmetric_only.size() == 1 && symmetric_only[0] == i;
    result.components.push_back({groups[i].first, canonical ? ComponentTag::canonical : ComponentTag::other});
    result.multiplicities.push_back(groups[i].second);
  }
  if (symmetric_only.size() != 1) result.note = "canonical component not identified by symmetric slopes";
  if (options.keep_abelian) {
    result.components.push_back({abelian, ComponentTag::abelian});
    result.multiplicities.push_back(1);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Newton polygons

namespace {

// Cross product of (b - a) and (c - a).
Integer cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  Integer bl(static_cast<long>(b.l - a.l)), bm(static_cast<long>(b.m - a.m));
  Integer cl(static_cast<long>(c.l - a.l)), cm(static_cast<long>(c.m - a.m));
  return bl * cm - bm * cl;
}

}  // namespace

NewtonPolygon newton_polygon_of_points(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return {pts};
  // Andrew's monotone chain; strict turns drop collinear support points.
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return {hull};
}

NewtonPolygon newton_polygon(const MultiPoly& poly) {
  if (poly.is_zero()) throw InvalidArgument("Newton polygon of the zero polynomial");
  const auto& vars = poly.vars();
  auto il = vars.find("L");
  auto im = vars.find("M");
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (v != il && v != im && poly.degree(v) > 0)
      throw InvalidArgument("Newton polygon needs a polynomial in L and M only");
  std::vector<LatticePoint> pts;
  for (const auto& t : poly.terms())
    pts.push_back({il ? poly.exponent(t.key, *il) : 0, im ? poly.exponent(t.key, *im) : 0});
  return newton_polygon_of_points(std::move(pts));
}

std::string SlopeConvention::to_string() const {
  std::string s = axis == Axis::lm ? "lm" : "ml";
  if (negate) s += "+negate";
  if (half) s += "+half";
  return s;
}

std::set<Slope> edge_slopes(const NewtonPolygon& np, const SlopeConvention& convention) {
  std::set<Slope> out;
  const auto& c = np.corners;
  if (c.size() < 2) return out;
  const std::size_t edges = c.size() == 2 ? 1 : c.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const auto& a = c[i];
    const auto& b = c[(i + 1) % c.size()];
    Integer dl(static_cast<long>(b.l - a.l));
    Integer dm(static_cast<long>(b.m - a.m));
    Integer num = convention.axis == SlopeConvention::Axis::lm ? dm : dl;
    Integer den = convention.axis == SlopeConvention::Axis::lm ? dl : dm;
    if (den == 0) {
      out.insert(Slope::infinity());
      continue;
    }
    if (convention.negate) num = -num;
    if (convention.half) den *= 2;
    out.insert(Slope(num, den));
  }
  return out;
}

SlopeConvention calibrate_slope_convention() {
  struct Sample {
    Rational fraction;
    std::set<Slope> polygon_slopes[8];
    std::set<Slope> boundary_slopes;
  };
  using Axis = SlopeConvention::Axis;
  std::vector<SlopeConvention> candidates;
  for (Axis axis : {Axis::lm, Axis::ml})
    for (bool negate : {false, true})
      for (bool half : {false, true}) candidates.push_back({axis, negate, half});

  std::vector<SlopeConvention> fitting = candidates;
  for (const Rational& knot : {Rational(2, 5), Rational(1, 3)}) {
    std::set<Slope> boundary;
    for (auto s : slope_report(knot).all_slopes()) boundary.insert(Slope(Integer(static_cast<long>(s)), 1));
    const auto np = newton_polygon(a_polynomial(knot, {.keep_abelian = true}).full.poly);
    std::erase_if(fitting, [&](const SlopeConvention& c) { return edge_slopes(np, c) != boundary; });
  }
  if (fitting.size() != 1)
    throw ComputationError("slope convention calibration matched " + std::to_string(fitting.size()) +
                           " conventions");
  return fitting.front();
}

}  // namespace tbk
