#include <doctest.h>

#include <random>
#include <vector>

#include "rayleigh/error.hpp"
#include "rayleigh/univariate.hpp"

using namespace rayleigh;

namespace {

UnivariateRationalPoly poly(std::vector<long> ascending) {
  std::vector<Rational> coeffs;
  for (long c : ascending) coeffs.emplace_back(c);
  return UnivariateRationalPoly(std::move(coeffs));
}

long next_long(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

TEST_CASE("basic arithmetic and evaluation") {
  const auto p = poly({1, 2, 3});  // 1 + 2x + 3x^2
  CHECK(p.degree() == 2);
  CHECK(p(Rational(2)) == 17);
  CHECK(p.derivative() == poly({2, 6}));
  CHECK(p * poly({0, 1}) == poly({0, 1, 2, 3}));
  CHECK(p - p == UnivariateRationalPoly::zero());
  CHECK_THROWS_AS(UnivariateRationalPoly::zero().degree(), Error);
}

TEST_CASE("division and gcd") {
  const auto num = poly({-1, 0, 1});      // (x-1)(x+1)
  const auto den = poly({-1, 1});         // x-1
  const auto [q, r] = divmod(num, den);
  CHECK(q == poly({1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(num, UnivariateRationalPoly::zero()), Error);

  CHECK(poly_gcd(num, den) == poly({-1, 1}));
  // coprime inputs give a constant
  const auto g = poly_gcd(poly({1, 1}), poly({2, 1}));
  CHECK(g.degree() == 0);
}

TEST_CASE("real-rootedness of the documented quadratics") {
  CHECK_FALSE(is_real_rooted(poly({1, 0, 1})));        // x^2 + 1
  CHECK(is_real_rooted(poly({170, 680, 680})));        // discriminant 0
  CHECK_FALSE(is_real_rooted(poly({180, 765, 816})));  // discriminant -2295
  CHECK(is_real_rooted(poly({5})));                    // constant
  CHECK(is_real_rooted(poly({1, 7})));                 // linear
  CHECK_THROWS_AS(is_real_rooted(UnivariateRationalPoly::zero()), Error);
}

TEST_CASE("real-rootedness agrees with the discriminant sign on quadratics") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const long a = next_long(rng, 1, 9) * (next_long(rng, 0, 1) ? 1 : -1);
    const long b = next_long(rng, -9, 9);
    const long c = next_long(rng, -9, 9);
    const bool expected = b * b - 4 * a * c >= 0;
    CHECK(is_real_rooted(poly({c, b, a})) == expected);
  }
}

TEST_CASE("products of linear factors are real-rooted") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int degree = static_cast<int>(next_long(rng, 1, 6));
    UnivariateRationalPoly p = poly({1});
    for (int i = 0; i < degree; ++i) {
      const Rational root = make_rational(next_long(rng, -12, 12),
                                          next_long(rng, 1, 4));
      p = p * UnivariateRationalPoly({-root, Rational(1)});
    }
    CHECK(is_real_rooted(p));
    CHECK(count_distinct_real_roots(p) <= degree);
    // tacking on an irreducible quadratic breaks it
    CHECK_FALSE(is_real_rooted(p * poly({1, 0, 1})));
  }
}

TEST_CASE("multiplicities are handled") {
  const auto dbl = poly({1, -2, 1});  // (x-1)^2
  CHECK(is_real_rooted(dbl));
  CHECK(count_distinct_real_roots(dbl) == 1);

  const auto mixed = poly({1, -2, 1}) * poly({2, 1});  // (x-1)^2 (x+2)
  CHECK(is_real_rooted(mixed));
  CHECK(count_distinct_real_roots(mixed) == 2);

  const auto complex_sq = poly({1, 0, 1}) * poly({1, 0, 1});  // (x^2+1)^2
  CHECK_FALSE(is_real_rooted(complex_sq));

  const auto three = poly({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  CHECK(count_distinct_real_roots(three) == 3);
  const auto one_real = poly({1, 0, 1}) * poly({-1, 1});
  CHECK(count_distinct_real_roots(one_real) == 1);
}

TEST_CASE("real-rootedness is invariant under positive scaling") {
  const std::vector<UnivariateRationalPoly> samples = {
      poly({170, 680, 680}), poly({180, 765, 816}), poly({-6, 11, -6, 1}),
      poly({1, 0, 1})};
  const std::vector<Rational> scales = {make_rational(3, 7), Rational(5),
                                        make_rational(1, 100)};
  for (const auto& p : samples) {
    const bool expected = is_real_rooted(p);
    for (const auto& c : scales) {
      CHECK(is_real_rooted(p * c) == expected);
      // substitute x -> x/c: coefficient i picks up c^-i
      std::vector<Rational> subst = p.coefficients();
      Rational power(1);
      for (std::size_t i = 0; i < subst.size(); ++i) {
        subst[i] *= power;
        power /= c;
      }
      CHECK(is_real_rooted(UnivariateRationalPoly(std::move(subst))) ==
            expected);
    }
  }
}
