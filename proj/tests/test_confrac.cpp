#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tbk/continued_fraction.hpp"
#include "tbk/errors.hpp"

using tbk::ContinuedFraction;
using tbk::Entry;
using tbk::Integer;
using tbk::Rational;

namespace {

std::vector<Entry> random_entries(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> entry(1, 9);
  std::bernoulli_distribution negative(0.5);
  std::vector<Entry> e(len(rng));
  for (auto& a : e) a = negative(rng) ? -entry(rng) : entry(rng);
  return e;
}

std::vector<std::vector<Entry>> entry_lists(const std::vector<tbk::Expansion>& xs) {
  std::vector<std::vector<Entry>> out;
  for (const auto& x : xs) out.push_back(x.cf.entries);
  return out;
}

}  // namespace

TEST_CASE("evaluate worked examples") {
  CHECK(tbk::evaluate({0, {4, -4}}) == Rational(4, 15));
  CHECK(tbk::evaluate({0, {-2, 2}}) == Rational(-2, 3));
  CHECK(tbk::evaluate({0, {2}}) == Rational(1, 2));
  CHECK(tbk::evaluate({3, {}}) == Rational(3));
  CHECK(tbk::evaluate({-1, {2, -2}}) == Rational(-1) + Rational(2, 3));
  CHECK_THROWS_AS(tbk::evaluate({0, {1, -1}}), tbk::DivisionByZero);
}

TEST_CASE("evaluate_with_tail worked examples") {
  const std::vector<Entry> prefix{2, -2, 2, -2, 2};
  CHECK(tbk::evaluate_with_tail(prefix, Rational(5)) == Rational(29, 35));
  CHECK(tbk::evaluate_with_tail({}, Rational(7)) == Rational(1, 7));
  const std::vector<Entry> k2{2, -2, 2};
  const Rational x(-3, 2);
  // Direct oracle: [2, -2, 2, -3/2] = 1/(2 + 1/(-2 + 1/(2 - 2/3))).
  const Rational direct =
      (Rational(2) + (Rational(-2) + (Rational(2) + x.reciprocal()).reciprocal()).reciprocal()).reciprocal();
  CHECK(tbk::evaluate_with_tail(k2, x) == direct);
}

TEST_CASE("negation and repetition") {
  const ContinuedFraction cf{0, {3, 2, -2, 2}};
  const ContinuedFraction neg = tbk::negate(cf);
  CHECK(neg.entries == std::vector<Entry>{-3, -2, 2, -2});
  CHECK(tbk::evaluate(cf) == Rational(4, 15));
  CHECK(tbk::evaluate(neg) == Rational(-4, 15));
  CHECK(tbk::negate(ContinuedFraction{0, {2}}).entries == std::vector<Entry>{-2});
  const std::vector<Entry> mp{-2, 2};
  const std::vector<Entry> pm{2, -2};
  CHECK(tbk::evaluate({0, tbk::expand_repetition(mp, 3)}) == Rational(-6, 7));
  CHECK(tbk::evaluate({0, tbk::expand_repetition(pm, 3)}) == Rational(6, 7));
  CHECK(tbk::expand_repetition(pm, 2) == std::vector<Entry>{2, -2, 2, -2});
  CHECK(tbk::expand_repetition(std::vector<Entry>{7}, 0).empty());
  CHECK(tbk::expand_repetition(mp, 2) == std::vector<Entry>{-2, 2, -2, 2});
}

TEST_CASE("negation identity on random expansions") {
  std::mt19937_64 rng(1);
  int checked = 0;
  while (checked < 1000) {
    ContinuedFraction cf{0, random_entries(rng, 8)};
    Rational v;
    if (!oracle::convergent_value(cf.entries, v)) continue;
    CHECK(tbk::evaluate(tbk::negate(cf)) == -tbk::evaluate(cf));
    ++checked;
  }
}

TEST_CASE("repeated blocks have closed forms") {
  const std::vector<Entry> mp{-2, 2};
  const std::vector<Entry> pm{2, -2};
  for (long s = 1; s <= 50; ++s) {
    CHECK(tbk::evaluate({0, tbk::expand_repetition(mp, static_cast<std::size_t>(s))}) == Rational(-2 * s, 2 * s + 1));
    CHECK(tbk::evaluate({0, tbk::expand_repetition(pm, static_cast<std::size_t>(s))}) == Rational(2 * s, 2 * s + 1));
  }
}

TEST_CASE("tail closed form ((2k+1)x+2k)/((2k+2)x+2k+1)") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 40);
  const std::vector<Entry> pm{2, -2};
  for (long k = 0; k <= 20; ++k) {
    auto prefix = tbk::expand_repetition(pm, static_cast<std::size_t>(k));
    prefix.push_back(2);
    int done = 0;
    while (done < 50) {
      const Rational x(Integer(num(rng)), Integer(den(rng)));
      const Rational d = Rational(2 * k + 2) * x + Rational(2 * k + 1);
      if (x.is_zero() || d.is_zero()) continue;
      Rational value;
      try {
        value = tbk::evaluate_with_tail(prefix, x);
      } catch (const tbk::DivisionByZero&) {
        continue;  // a partial tail vanished; the closed form does not apply
      }
      CHECK(value == (Rational(2 * k + 1) * x + Rational(2 * k)) / d);
      ++done;
    }
  }
}

TEST_CASE("composition at every split point") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 200) {
    const auto e = random_entries(rng, 9);
    Rational v;
    if (!oracle::convergent_value(e, v) || v.is_zero()) continue;
    bool defined = true;
    for (std::size_t i = 1; i < e.size() && defined; ++i) {
      Rational tail;
      if (!oracle::convergent_value({e.begin() + static_cast<long>(i), e.end()}, tail) || tail.is_zero())
        defined = false;
    }
    if (!defined) continue;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::vector<Entry> head(e.begin(), e.begin() + static_cast<long>(i));
      const Rational tail = tbk::evaluate({0, {e.begin() + static_cast<long>(i), e.end()}});
      CHECK(tbk::evaluate({0, e}) == tbk::evaluate_with_tail(head, tail.reciprocal()));
    }
    ++checked;
  }
}

TEST_CASE("enumeration worked examples") {
  using V = std::vector<std::vector<Entry>>;
  CHECK(entry_lists(tbk::enumerate_admissible(Rational(4, 15))) ==
        V{{-2, 2, -3, 2, -2}, {-2, 2, -2, -3}, {3, 2, -2, 2}, {4, -4}});
  CHECK(entry_lists(tbk::enumerate_admissible(Rational(1, 3))) == V{{-2, 2}, {3}});
  CHECK(entry_lists(tbk::enumerate_admissible(Rational(6, 35))) ==
        V{{-2, 2, -2, 2, -3, 2, -2, 2, -2}, {-2, 2, -2, 2, -2, -5}, {5, 2, -2, 2, -2, 2}, {6, -6}});
  for (const auto& e : tbk::enumerate_admissible(Rational(4, 15))) {
    CHECK(tbk::evaluate(e.cf) == e.representative);
    CHECK(e.cf.admissible());
  }
  CHECK_THROWS_AS(tbk::enumerate_admissible(Rational(1, 4)), tbk::InvalidArgument);
  CHECK_THROWS_AS(tbk::enumerate_admissible(Rational(4, 3)), tbk::InvalidArgument);
  CHECK_THROWS_AS(tbk::enumerate_admissible(Rational(0)), tbk::InvalidArgument);
}

TEST_CASE("enumeration matches the exhaustive oracle for q <= 45") {
  for (long q = 3; q <= 45; q += 2) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational f(p, q);
      const auto got = tbk::enumerate_admissible(f);
      const auto lists = entry_lists(got);
      const auto expected = oracle::admissible_expansions(f);
      CHECK(std::set<std::vector<Entry>>(lists.begin(), lists.end()) == expected);
      CHECK(lists.size() == expected.size());
      CHECK(std::is_sorted(lists.begin(), lists.end()));
      for (const auto& e : got) {
        Rational v;
        REQUIRE(oracle::convergent_value(e.cf.entries, v));
        CHECK(v == e.representative);
        CHECK((v - f).is_integer());
      }
    }
  }
}

TEST_CASE("all-even expansion is unique and exact") {
  CHECK(tbk::all_even_expansion(Rational(4, 15)).entries == std::vector<Entry>{4, -4});
  CHECK(tbk::all_even_expansion(Rational(2, 3)).entries == std::vector<Entry>{2, -2});
  for (long n = 2; n <= 10; ++n)
    CHECK(tbk::all_even_expansion(Rational(2 * n, 4 * n * n - 1)).entries == std::vector<Entry>{2 * n, -2 * n});
  for (long q = 3; q <= 45; q += 2) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational f(p, q);
      const auto even = tbk::all_even_expansion(f);
      CHECK(tbk::evaluate(even) == f);
      int found = 0;
      for (const auto& e : oracle::admissible_expansions(f))
        if (std::all_of(e.begin(), e.end(), [](Entry a) { return a % 2 == 0; })) {
          ++found;
          CHECK(e == even.entries);
        }
      CHECK(found == 1);
    }
  }
}

TEST_CASE("all-positive expansion") {
  CHECK(tbk::all_positive_expansion(Rational(4, 15)).entries == std::vector<Entry>{3, 1, 3});
  CHECK(tbk::all_positive_expansion(Rational(11, 15)).entries == std::vector<Entry>{1, 2, 1, 3});
  CHECK(tbk::all_positive_expansion(Rational(1, 5)).entries == std::vector<Entry>{5});
  // [1, 2, 1, 3] evaluates to 11/15, the mirror representative of 4/15.
  CHECK(tbk::evaluate({0, {1, 2, 1, 3}}) == Rational(11, 15));
  CHECK_THROWS_AS(tbk::all_positive_expansion(Rational(3, 2)), tbk::InvalidArgument);
}

TEST_CASE("continued fraction text syntax") {
  CHECK(tbk::parse_continued_fraction("[4,-4]").entries == std::vector<Entry>{4, -4});
  CHECK(tbk::parse_continued_fraction("[(-2,2)_3,-3]").entries == std::vector<Entry>{-2, 2, -2, 2, -2, 2, -3});
  CHECK(tbk::parse_continued_fraction("[(\xE2\x88\x92" "2,2)_1, 5]").entries == std::vector<Entry>{-2, 2, 5});
  CHECK(tbk::parse_continued_fraction("[ ]").entries.empty());
  CHECK(ContinuedFraction{0, {3, 2, -2, 2}}.to_string() == "[3,2,-2,2]");
  CHECK(ContinuedFraction{-1, {2, -2}}.to_string() == "-1+[2,-2]");
  CHECK_THROWS_AS(tbk::parse_continued_fraction("[4,0]"), tbk::ParseError);
  CHECK_THROWS_AS(tbk::parse_continued_fraction("[4,-4"), tbk::ParseError);
  CHECK_THROWS_AS(tbk::parse_continued_fraction("[(2,2)3]"), tbk::ParseError);
}
