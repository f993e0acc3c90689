#pragma once

#include <vector>

#include "rayleigh/rational.hpp"

namespace rayleigh {

/// Dense univariate polynomial over exact rationals, coefficients in
/// ascending degree order. The zero polynomial stores no coefficients.
class UnivariateRationalPoly {
 public:
  UnivariateRationalPoly() = default;
  explicit UnivariateRationalPoly(std::vector<Rational> ascending);

  static UnivariateRationalPoly zero() { return UnivariateRationalPoly(); }

  bool is_zero() const { return coefficients_.empty(); }
  /// Degree; throws Error for the zero polynomial.
  int degree() const;
  const Rational& leading() const;
  Rational coefficient(int power) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& x) const;
  UnivariateRationalPoly derivative() const;

  UnivariateRationalPoly operator+(const UnivariateRationalPoly& o) const;
  UnivariateRationalPoly operator-(const UnivariateRationalPoly& o) const;
  UnivariateRationalPoly operator*(const UnivariateRationalPoly& o) const;
  UnivariateRationalPoly operator*(const Rational& scalar) const;

  bool operator==(const UnivariateRationalPoly& o) const {
    return coefficients_ == o.coefficients_;
  }

 private:
  std::vector<Rational> coefficients_;
};

/// Quotient and remainder of exact polynomial division.
std::pair<UnivariateRationalPoly, UnivariateRationalPoly> divmod(
    const UnivariateRationalPoly& num, const UnivariateRationalPoly& den);

/// Monic greatest common divisor (or a nonzero constant for coprime inputs).
UnivariateRationalPoly poly_gcd(UnivariateRationalPoly a,
                                UnivariateRationalPoly b);

/// Signed remainder sequence starting from p and p', each member scaled to a
/// primitive integer polynomial (positive scaling only, so all sign behavior
/// is preserved).
std::vector<UnivariateRationalPoly> sturm_chain(
    const UnivariateRationalPoly& p);

/// Number of distinct real roots, by Sturm sign variations at -inf/+inf.
int count_distinct_real_roots(const UnivariateRationalPoly& p);

/// True iff every complex root of p is real (with multiplicity). Exact:
/// compares the Sturm root count of the squarefree part with its degree.
/// Throws Error for the zero polynomial.
bool is_real_rooted(const UnivariateRationalPoly& p);

}  // namespace rayleigh
