#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tbk/errors.hpp"
#include "tbk/multipoly.hpp"
#include "tbk/poly_io.hpp"
#include "tbk/rational.hpp"

using tbk::ArithOp;
using tbk::Integer;
using tbk::MultiPoly;
using tbk::Rational;
using tbk::Slope;
using tbk::VarSet;

namespace {

const VarSet kLMu{"L", "M", "u"};
const VarSet kLM{"L", "M"};

MultiPoly var(const VarSet& vs, const char* name) { return MultiPoly::variable(vs, name); }
MultiPoly cst(const VarSet& vs, long c) { return MultiPoly::constant(vs, c); }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(tbk::rational_arithmetic(Rational(1, 2), Rational(1, 3), ArithOp::add) == Rational(5, 6));
  CHECK(tbk::rational_arithmetic(Rational(4, 15), Rational(15, 4), ArithOp::mul) == Rational(1));
  const Rational z = tbk::rational_arithmetic(Rational(2, 3), Rational(2, 3), ArithOp::sub);
  CHECK(z.is_zero());
  CHECK(z.denominator() == 1);
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK_THROWS_AS(tbk::rational_arithmetic(Rational(1), Rational(0), ArithOp::div), tbk::DivisionByZero);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), tbk::DivisionByZero);
}

TEST_CASE("rational parsing, rounding and fractional part") {
  CHECK(Rational::parse("-4/15") == Rational(-4, 15));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("4/"), tbk::ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), tbk::ParseError);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(-11, 15).frac() == Rational(4, 15));
  CHECK(Rational(3, 7) < Rational(1, 2));
}

TEST_CASE("slopes normalize and order with infinity last") {
  CHECK(Slope(Integer(4), Integer(-2)) == Slope(Integer(-2), Integer(1)));
  CHECK(Slope(Integer(-3), Integer(0)) == Slope::infinity());
  CHECK(Slope::infinity().to_string() == "1/0");
  CHECK(Slope(Integer(-14), Integer(1)) < Slope(Integer(0), Integer(1)));
  CHECK(Slope(Integer(100), Integer(1)) < Slope::infinity());
}

TEST_CASE("resultant worked examples") {
  const VarSet vs{"L", "M", "u"};
  const MultiPoly u = var(vs, "u");
  CHECK(tbk::poly_resultant(u - cst(vs, 1), u + cst(vs, 1), "u") == cst(vs, 2));
  CHECK(tbk::poly_resultant(u * u - cst(vs, 1), u - cst(vs, 1), "u").is_zero());
  const MultiPoly L = var(vs, "L");
  const MultiPoly M = var(vs, "M");
  // Res_u(u^2 - M, L - u) = L^2 - M (3x3 Sylvester determinant by hand).
  CHECK(tbk::poly_resultant(u * u - M, L - u, "u") == L * L - M);
  CHECK_THROWS_AS(tbk::poly_resultant(L, M, "u"), tbk::InvalidArgument);
}

TEST_CASE("cleanup modes") {
  const MultiPoly L = var(kLM, "L");
  const MultiPoly M = var(kLM, "M");
  const MultiPoly f = cst(kLM, 6) * M + cst(kLM, 9) * L;
  CHECK(tbk::poly_cleanup(f, tbk::CleanupMode::content) == cst(kLM, 3));
  CHECK(tbk::poly_cleanup(f, tbk::CleanupMode::primitive_part) == cst(kLM, 2) * M + cst(kLM, 3) * L);
  const MultiPoly l1 = L - cst(kLM, 1);
  const MultiPoly sq = tbk::poly_cleanup(l1 * l1 * M, tbk::CleanupMode::squarefree_part);
  // The result must divide the input.
  CHECK(tbk::try_divexact(l1 * l1 * M, sq).has_value());
  CHECK(sq == l1 * M);
  CHECK_THROWS_AS(tbk::poly_cleanup(MultiPoly(kLM), tbk::CleanupMode::content), tbk::InvalidArgument);
}

TEST_CASE("squarefree decomposition groups factors by multiplicity") {
  const MultiPoly L = var(kLM, "L");
  const MultiPoly M = var(kLM, "M");
  const MultiPoly a = L * M + cst(kLM, 1);
  const MultiPoly b = L - M;
  const MultiPoly c = M * M + cst(kLM, 2);
  const auto parts = tbk::squarefree_decomposition(cst(kLM, 5) * a * b.pow(2) * c.pow(3));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].second == 1);
  CHECK(parts[1].second == 2);
  CHECK(parts[2].second == 3);
  CHECK(parts[0].first == a.normalized_sign());
  CHECK(parts[1].first == b.normalized_sign());
  CHECK(parts[2].first == c.normalized_sign());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly f = oracle::random_poly(rng, kLMu, 3, 5, 6);
    const MultiPoly g = oracle::random_poly(rng, kLMu, 3, 5, 6);
    const MultiPoly h = oracle::random_poly(rng, kLMu, 3, 5, 6);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("gcd recovers a planted common factor") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    const MultiPoly f = oracle::random_poly(rng, kLM, 3, 6, 5);
    const MultiPoly g = oracle::random_poly(rng, kLM, 3, 6, 5);
    const MultiPoly h = oracle::random_poly(rng, kLM, 2, 4, 3);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    const MultiPoly d = tbk::gcd(f * h, g * h);
    CHECK(tbk::try_divexact(d, tbk::poly_cleanup(h, tbk::CleanupMode::primitive_part)).has_value());
    CHECK(tbk::try_divexact(f * h, d).has_value());
    CHECK(tbk::try_divexact(g * h, d).has_value());
  }
}

TEST_CASE("resultant swap sign and three independent routes agree") {
  std::mt19937_64 rng(4242);
  const VarSet bivariate{"M", "u"};
  const std::size_t u = bivariate.index_of("u");
  int compared = 0;
  int by_laplace = 0;
  while (compared < 200) {
    const MultiPoly f = oracle::random_poly(rng, bivariate, 4, 6, 5);
    const MultiPoly g = oracle::random_poly(rng, bivariate, 4, 6, 5);
    if (f.degree(u) <= 0 || g.degree(u) <= 0) continue;
    const MultiPoly sub = tbk::resultant_subresultant(f, g, u);
    CHECK(sub == tbk::resultant_sylvester(f, g, u));
    // Cofactor expansion is factorial in the matrix size; keep it to 6x6.
    if (f.degree(u) + g.degree(u) <= 6) {
      CHECK(sub == oracle::sylvester_resultant(f, g, u));
      ++by_laplace;
    }
    const bool odd = (f.degree(u) * g.degree(u)) % 2 != 0;
    CHECK(tbk::resultant_subresultant(g, f, u) == (odd ? -sub : sub));
    ++compared;
  }
  CHECK(by_laplace > 20);
}

TEST_CASE("apoly text format round trip and strictness") {
  const MultiPoly L = var(kLM, "L");
  const MultiPoly M = var(kLM, "M");
  const MultiPoly f = L * M.pow(6) + cst(kLM, 1) - cst(kLM, 12) * L.pow(2);
  const std::string text = tbk::format_apoly(f);
  CHECK(text.rfind("# apoly v1\nvars L M\n", 0) == 0);
  CHECK(tbk::parse_apoly(text) == f);
  CHECK_THROWS_AS(tbk::parse_apoly("vars L M\nterm 0 0 1\n"), tbk::ParseError);
  CHECK_THROWS_AS(tbk::parse_apoly("# apoly v1\nvars L M\nterm 1 0 1\nterm 0 0 1\n"), tbk::ParseError);
  CHECK_THROWS_AS(tbk::parse_apoly("# apoly v1\nvars L M\nterm 0 0 0\n"), tbk::ParseError);
  CHECK_THROWS_AS(tbk::parse_apoly("# apoly v1\nvars L M\nterm 0 x 1\n"), tbk::ParseError);
}

TEST_CASE("exponent limits are enforced") {
  const MultiPoly L = var(kLM, "L");
  CHECK_THROWS_AS(L.pow(70000), tbk::InvalidArgument);
  CHECK_THROWS_AS(VarSet({"a", "b", "c", "d", "e"}), tbk::InvalidArgument);
  CHECK_THROWS_AS(VarSet({"a", "a"}), tbk::InvalidArgument);
}
