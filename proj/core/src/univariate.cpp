#include "rayleigh/univariate.hpp"

#include <algorithm>

#include "rayleigh/error.hpp"

namespace rayleigh {

namespace {

// Scales to an integer polynomial with content 1, preserving the sign of
// every coefficient.
UnivariateRationalPoly primitive_part(const UnivariateRationalPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm(1);
  for (const auto& c : p.coefficients()) {
    Integer den = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
  }
  Integer content(0);
  for (const auto& c : p.coefficients()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  const Rational factor = make_rational(den_lcm, content);
  return p * factor;
}

int sign_at_plus_infinity(const UnivariateRationalPoly& p) {
  return sgn(p.leading());
}

int sign_at_minus_infinity(const UnivariateRationalPoly& p) {
  const int s = sgn(p.leading());
  return (p.degree() % 2 == 0) ? s : -s;
}

int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int previous = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

}  // namespace

UnivariateRationalPoly::UnivariateRationalPoly(std::vector<Rational> ascending)
    : coefficients_(std::move(ascending)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

int UnivariateRationalPoly::degree() const {
  if (is_zero()) {
    throw Error("degree of the zero polynomial is undefined");
  }
  return static_cast<int>(coefficients_.size()) - 1;
}

const Rational& UnivariateRationalPoly::leading() const {
  if (is_zero()) {
    throw Error("leading coefficient of the zero polynomial is undefined");
  }
  return coefficients_.back();
}

Rational UnivariateRationalPoly::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coefficients_.size())) {
    return Rational(0);
  }
  return coefficients_[static_cast<std::size_t>(power)];
}

Rational UnivariateRationalPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UnivariateRationalPoly UnivariateRationalPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    out.push_back(coefficients_[i] * Rational(static_cast<long>(i)));
  }
  return UnivariateRationalPoly(std::move(out));
}

UnivariateRationalPoly UnivariateRationalPoly::operator+(
    const UnivariateRationalPoly& o) const {
  std::vector<Rational> out(std::max(coefficients_.size(), o.coefficients_.size()),
                            Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i) out[i] += o.coefficients_[i];
  return UnivariateRationalPoly(std::move(out));
}

UnivariateRationalPoly UnivariateRationalPoly::operator-(
    const UnivariateRationalPoly& o) const {
  std::vector<Rational> out(std::max(coefficients_.size(), o.coefficients_.size()),
                            Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i) out[i] -= o.coefficients_[i];
  return UnivariateRationalPoly(std::move(out));
}

UnivariateRationalPoly UnivariateRationalPoly::operator*(
    const UnivariateRationalPoly& o) const {
  if (is_zero() || o.is_zero()) return UnivariateRationalPoly();
  std::vector<Rational> out(coefficients_.size() + o.coefficients_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < o.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * o.coefficients_[j];
    }
  }
  return UnivariateRationalPoly(std::move(out));
}

UnivariateRationalPoly UnivariateRationalPoly::operator*(
    const Rational& scalar) const {
  std::vector<Rational> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) out.push_back(c * scalar);
  return UnivariateRationalPoly(std::move(out));
}

std::pair<UnivariateRationalPoly, UnivariateRationalPoly> divmod(
    const UnivariateRationalPoly& num, const UnivariateRationalPoly& den) {
  if (den.is_zero()) {
    throw Error("polynomial division by zero");
  }
  std::vector<Rational> rem = num.coefficients();
  const int dd = den.degree();
  if (num.is_zero() || num.degree() < dd) {
    return {UnivariateRationalPoly(), num};
  }
  std::vector<Rational> quot(num.coefficients().size() -
                                 static_cast<std::size_t>(dd),
                             Rational(0));
  for (int k = static_cast<int>(rem.size()) - 1 - dd; k >= 0; --k) {
    const Rational factor =
        rem[static_cast<std::size_t>(k + dd)] / den.leading();
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= factor * den.coefficient(j);
    }
  }
  return {UnivariateRationalPoly(std::move(quot)),
          UnivariateRationalPoly(std::move(rem))};
}

UnivariateRationalPoly poly_gcd(UnivariateRationalPoly a,
                                UnivariateRationalPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());  // monic
}

std::vector<UnivariateRationalPoly> sturm_chain(
    const UnivariateRationalPoly& p) {
  if (p.is_zero()) {
    throw Error("Sturm chain of the zero polynomial is undefined");
  }
  std::vector<UnivariateRationalPoly> chain;
  chain.push_back(primitive_part(p));
  if (p.degree() == 0) return chain;
  chain.push_back(primitive_part(p.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const auto& prev = chain[chain.size() - 2];
    const auto& curr = chain.back();
    auto [q, r] = divmod(prev, curr);
    if (r.is_zero()) break;
    chain.push_back(primitive_part(r * Rational(-1)));
  }
  return chain;
}

int count_distinct_real_roots(const UnivariateRationalPoly& p) {
  if (p.is_zero()) {
    throw Error("root count of the zero polynomial is undefined");
  }
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  std::vector<int> at_minus;
  std::vector<int> at_plus;
  at_minus.reserve(chain.size());
  at_plus.reserve(chain.size());
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    at_minus.push_back(sign_at_minus_infinity(q));
    at_plus.push_back(sign_at_plus_infinity(q));
  }
  return count_sign_changes(at_minus) - count_sign_changes(at_plus);
}

bool is_real_rooted(const UnivariateRationalPoly& p) {
  if (p.is_zero()) {
    throw Error("real-rootedness of the zero polynomial is undefined");
  }
  if (p.degree() == 0) return true;
  // Multiplicities do not affect which roots are real: test the squarefree
  // part for a full count of distinct real roots.
  const UnivariateRationalPoly g = poly_gcd(p, p.derivative());
  UnivariateRationalPoly squarefree = p;
  if (!g.is_zero() && g.degree() > 0) {
    auto [q, r] = divmod(p, g);
    if (!r.is_zero()) {
      throw Error("internal error: gcd does not divide its input");
    }
    squarefree = std::move(q);
  }
  return count_distinct_real_roots(squarefree) == squarefree.degree();
}

}  // namespace rayleigh
