#pragma once

#include <compare>
#include <map>
#include <string>

#include "rayleigh/ground_set.hpp"
#include "rayleigh/rational.hpp"
#include "rayleigh/subsets.hpp"

namespace rayleigh {

/// Exponent function alpha: ground -> {0,1,2}, stored as disjoint masks of
/// the positions with exponent 1 and exponent 2.
struct Exponents {
  Subset ones = 0;
  Subset twos = 0;

  int total_degree() const { return subset_size(ones) + 2 * subset_size(twos); }
  auto operator<=>(const Exponents&) const = default;
};

/// A total assignment of rationals to the elements of a ground set.
class RationalPoint {
 public:
  RationalPoint(GroundSet ground, std::vector<Rational> values);
  RationalPoint(const GroundSet& ground,
                const std::map<std::string, Rational>& assignment);

  const GroundSet& ground() const { return ground_; }
  const Rational& value(int index) const {
    return values_[static_cast<std::size_t>(index)];
  }
  const Rational& value(const std::string& label) const;

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
};

/// Multiaffine polynomial over exact rationals: every variable occurs to at
/// most the first power. Terms are keyed by subsets of the ground set; no
/// zero coefficients are stored. Values are immutable after construction.
class MultiaffinePoly {
 public:
  MultiaffinePoly(GroundSet ground, std::map<Subset, Rational> terms);

  static MultiaffinePoly zero(GroundSet ground);
  static MultiaffinePoly constant(GroundSet ground, Rational value);
  static MultiaffinePoly monomial(GroundSet ground, Subset s,
                                  Rational coefficient);

  const GroundSet& ground() const { return ground_; }
  const std::map<Subset, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; throws Error for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Coefficient of y^S; zero if absent.
  Rational coefficient(Subset s) const;

  bool operator==(const MultiaffinePoly& other) const {
    return ground_ == other.ground_ && terms_ == other.terms_;
  }

  MultiaffinePoly operator+(const MultiaffinePoly& other) const;
  MultiaffinePoly operator-(const MultiaffinePoly& other) const;
  MultiaffinePoly operator*(const Rational& scalar) const;

 private:
  GroundSet ground_;
  std::map<Subset, Rational> terms_;
};

/// Homogeneous polynomial over exact rationals with per-variable degree at
/// most two. Homogeneity is enforced at construction; the zero form has an
/// empty term map and undefined degree.
class BoundedExponentForm {
 public:
  BoundedExponentForm(GroundSet ground, std::map<Exponents, Rational> terms);

  static BoundedExponentForm zero(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; throws Error for the zero form.
  int degree() const;
  Rational coefficient(const Exponents& alpha) const;

  bool operator==(const BoundedExponentForm& other) const {
    return ground_ == other.ground_ && terms_ == other.terms_;
  }

  BoundedExponentForm operator+(const BoundedExponentForm& other) const;
  BoundedExponentForm operator-(const BoundedExponentForm& other) const;
  BoundedExponentForm operator*(const Rational& scalar) const;
  /// Exact product; throws Error if any variable would exceed exponent 2.
  BoundedExponentForm operator*(const BoundedExponentForm& other) const;

 private:
  GroundSet ground_;
  std::map<Exponents, Rational> terms_;
};

/// The minor of Z avoiding element g (terms whose subset excludes g), on the
/// ground set with g removed.
MultiaffinePoly deletion(const MultiaffinePoly& z, const std::string& g);

/// The minor of Z at element g (coefficient of y_g), on the ground set with
/// g removed.
MultiaffinePoly contraction(const MultiaffinePoly& z, const std::string& g);

/// Exact product of two multiaffine polynomials on the same ground set, as a
/// bounded-exponent form. Both factors must be homogeneous (or zero).
BoundedExponentForm multiply(const MultiaffinePoly& p,
                             const MultiaffinePoly& q);

/// Rayleigh difference of e and f in Z:
///   Z_e^f * Z_f^e - Z_{ef} * Z^{ef},
/// a form on the ground set without e and f.
BoundedExponentForm rayleigh_difference(const MultiaffinePoly& z,
                                        const std::string& e,
                                        const std::string& f);

/// Elementary symmetric polynomial e_k on the elements of `s`, as a
/// polynomial on the full ground. Zero for k < 0 or k > |s|; one for k == 0.
MultiaffinePoly elementary_symmetric(const GroundSet& ground, Subset s,
                                     int k);

/// Monomial symmetric form with i squared variables and n-2i linear
/// variables drawn from `s`, all coefficients one. Requires 0 <= 2i <= n.
BoundedExponentForm monomial_symmetric(const GroundSet& ground, Subset s,
                                       int n, int i);

Rational evaluate(const MultiaffinePoly& p, const RationalPoint& point);
Rational evaluate(const BoundedExponentForm& f, const RationalPoint& point);

}  // namespace rayleigh
