#include "rayleigh/polynomial.hpp"

#include <utility>

#include "rayleigh/error.hpp"

namespace rayleigh {

namespace {

void require_same_ground(const GroundSet& a, const GroundSet& b,
                         const char* what) {
  if (!(a == b)) {
    throw Error(std::string("ground set mismatch in ") + what);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalPoint

RationalPoint::RationalPoint(GroundSet ground, std::vector<Rational> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != ground_.size()) {
    throw Error("point assignment is not total on the ground set");
  }
}

RationalPoint::RationalPoint(const GroundSet& ground,
                             const std::map<std::string, Rational>& assignment)
    : ground_(ground) {
  values_.resize(static_cast<std::size_t>(ground_.size()));
  if (static_cast<int>(assignment.size()) != ground_.size()) {
    throw Error("point assignment is not total on the ground set");
  }
  for (const auto& [label, value] : assignment) {
    values_[static_cast<std::size_t>(ground_.index_of(label))] = value;
  }
}

const Rational& RationalPoint::value(const std::string& label) const {
  const int i = ground_.find(label);
  if (i < 0) {
    throw Error("missing assignment for element '" + label + "'");
  }
  return value(i);
}

// ---------------------------------------------------------------------------
// MultiaffinePoly

MultiaffinePoly::MultiaffinePoly(GroundSet ground,
                                 std::map<Subset, Rational> terms)
    : ground_(std::move(ground)), terms_(std::move(terms)) {
  const Subset full = ground_.full_mask();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if ((it->first & ~full) != 0) {
      throw Error("term subset leaves the ground set");
    }
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  }
}

MultiaffinePoly MultiaffinePoly::zero(GroundSet ground) {
  return MultiaffinePoly(std::move(ground), {});
}

MultiaffinePoly MultiaffinePoly::constant(GroundSet ground, Rational value) {
  std::map<Subset, Rational> terms;
  if (value != 0) terms.emplace(Subset{0}, std::move(value));
  return MultiaffinePoly(std::move(ground), std::move(terms));
}

MultiaffinePoly MultiaffinePoly::monomial(GroundSet ground, Subset s,
                                          Rational coefficient) {
  std::map<Subset, Rational> terms;
  if (coefficient != 0) terms.emplace(s, std::move(coefficient));
  return MultiaffinePoly(std::move(ground), std::move(terms));
}

int MultiaffinePoly::degree() const {
  if (is_zero()) {
    throw Error("degree of the zero polynomial is undefined");
  }
  int d = 0;
  for (const auto& [s, c] : terms_) {
    d = std::max(d, subset_size(s));
  }
  return d;
}

bool MultiaffinePoly::is_homogeneous() const {
  if (is_zero()) return true;
  const int d = subset_size(terms_.begin()->first);
  for (const auto& [s, c] : terms_) {
    if (subset_size(s) != d) return false;
  }
  return true;
}

Rational MultiaffinePoly::coefficient(Subset s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiaffinePoly MultiaffinePoly::operator+(const MultiaffinePoly& other) const {
  require_same_ground(ground_, other.ground_, "polynomial addition");
  std::map<Subset, Rational> sum = terms_;
  for (const auto& [s, c] : other.terms_) {
    sum[s] += c;
  }
  return MultiaffinePoly(ground_, std::move(sum));
}

MultiaffinePoly MultiaffinePoly::operator-(const MultiaffinePoly& other) const {
  require_same_ground(ground_, other.ground_, "polynomial subtraction");
  std::map<Subset, Rational> diff = terms_;
  for (const auto& [s, c] : other.terms_) {
    diff[s] -= c;
  }
  return MultiaffinePoly(ground_, std::move(diff));
}

MultiaffinePoly MultiaffinePoly::operator*(const Rational& scalar) const {
  std::map<Subset, Rational> scaled;
  if (scalar != 0) {
    for (const auto& [s, c] : terms_) {
      scaled.emplace(s, c * scalar);
    }
  }
  return MultiaffinePoly(ground_, std::move(scaled));
}

// ---------------------------------------------------------------------------
// BoundedExponentForm

BoundedExponentForm::BoundedExponentForm(GroundSet ground,
                                         std::map<Exponents, Rational> terms)
    : ground_(std::move(ground)), terms_(std::move(terms)) {
  const Subset full = ground_.full_mask();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
      continue;
    }
    const Exponents& a = it->first;
    if ((a.ones & a.twos) != 0) {
      throw Error("exponent masks overlap");
    }
    if (((a.ones | a.twos) & ~full) != 0) {
      throw Error("term exponents leave the ground set");
    }
    ++it;
  }
  if (!terms_.empty()) {
    const int d = terms_.begin()->first.total_degree();
    for (const auto& [a, c] : terms_) {
      if (a.total_degree() != d) {
        throw Error("mixed-degree form rejected: forms must be homogeneous");
      }
    }
  }
}

BoundedExponentForm BoundedExponentForm::zero(GroundSet ground) {
  return BoundedExponentForm(std::move(ground), {});
}

int BoundedExponentForm::degree() const {
  if (is_zero()) {
    throw Error("degree of the zero form is undefined");
  }
  return terms_.begin()->first.total_degree();
}

Rational BoundedExponentForm::coefficient(const Exponents& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

BoundedExponentForm BoundedExponentForm::operator+(
    const BoundedExponentForm& other) const {
  require_same_ground(ground_, other.ground_, "form addition");
  std::map<Exponents, Rational> sum = terms_;
  for (const auto& [a, c] : other.terms_) {
    sum[a] += c;
  }
  return BoundedExponentForm(ground_, std::move(sum));
}

BoundedExponentForm BoundedExponentForm::operator-(
    const BoundedExponentForm& other) const {
  require_same_ground(ground_, other.ground_, "form subtraction");
  std::map<Exponents, Rational> diff = terms_;
  for (const auto& [a, c] : other.terms_) {
    diff[a] -= c;
  }
  return BoundedExponentForm(ground_, std::move(diff));
}

BoundedExponentForm BoundedExponentForm::operator*(
    const Rational& scalar) const {
  std::map<Exponents, Rational> scaled;
  if (scalar != 0) {
    for (const auto& [a, c] : terms_) {
      scaled.emplace(a, c * scalar);
    }
  }
  return BoundedExponentForm(ground_, std::move(scaled));
}

BoundedExponentForm BoundedExponentForm::operator*(
    const BoundedExponentForm& other) const {
  require_same_ground(ground_, other.ground_, "form multiplication");
  std::map<Exponents, Rational> product;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      // overflow when some variable would reach exponent 3 or 4
      if ((a.twos & (b.twos | b.ones)) != 0 || (b.twos & a.ones) != 0) {
        throw Error("form product exceeds per-variable degree 2");
      }
      const Exponents prod{.ones = a.ones ^ b.ones,
                           .twos = a.twos | b.twos | (a.ones & b.ones)};
      product[prod] += ca * cb;
    }
  }
  return BoundedExponentForm(ground_, std::move(product));
}

// ---------------------------------------------------------------------------
// Minors and the Rayleigh difference

MultiaffinePoly deletion(const MultiaffinePoly& z, const std::string& g) {
  const int pos = z.ground().index_of(g);
  std::map<Subset, Rational> kept;
  for (const auto& [s, c] : z.terms()) {
    if (!subset_contains(s, pos)) {
      kept.emplace(collapse_position(s, pos), c);
    }
  }
  return MultiaffinePoly(z.ground().without(pos), std::move(kept));
}

MultiaffinePoly contraction(const MultiaffinePoly& z, const std::string& g) {
  const int pos = z.ground().index_of(g);
  std::map<Subset, Rational> kept;
  for (const auto& [s, c] : z.terms()) {
    if (subset_contains(s, pos)) {
      kept.emplace(collapse_position(s & ~subset_bit(pos), pos), c);
    }
  }
  return MultiaffinePoly(z.ground().without(pos), std::move(kept));
}

BoundedExponentForm multiply(const MultiaffinePoly& p,
                             const MultiaffinePoly& q) {
  require_same_ground(p.ground(), q.ground(), "multiply");
  if (!p.is_homogeneous() || !q.is_homogeneous()) {
    throw Error("multiply requires homogeneous factors");
  }
  std::map<Exponents, Rational> product;
  for (const auto& [s, cs] : p.terms()) {
    for (const auto& [t, ct] : q.terms()) {
      const Exponents prod{.ones = s ^ t, .twos = s & t};
      product[prod] += cs * ct;
    }
  }
  return BoundedExponentForm(p.ground(), std::move(product));
}

BoundedExponentForm rayleigh_difference(const MultiaffinePoly& z,
                                        const std::string& e,
                                        const std::string& f) {
  if (e == f) {
    throw Error("Rayleigh difference requires two distinct elements");
  }
  z.ground().index_of(e);
  z.ground().index_of(f);
  const MultiaffinePoly z_e = contraction(z, e);
  const MultiaffinePoly z_f = contraction(z, f);
  const MultiaffinePoly ze_f = deletion(z_e, f);                // Z_e^f
  const MultiaffinePoly zf_e = deletion(z_f, e);                // Z_f^e
  const MultiaffinePoly z_ef = contraction(z_e, f);             // Z_{ef}
  const MultiaffinePoly z_no_ef = deletion(deletion(z, e), f);  // Z^{ef}
  return multiply(ze_f, zf_e) - multiply(z_ef, z_no_ef);
}

// ---------------------------------------------------------------------------
// Symmetric function constructors

MultiaffinePoly elementary_symmetric(const GroundSet& ground, Subset s,
                                     int k) {
  std::map<Subset, Rational> terms;
  for (Subset t : k_subsets(s, k)) {
    terms.emplace(t, Rational(1));
  }
  return MultiaffinePoly(ground, std::move(terms));
}

BoundedExponentForm monomial_symmetric(const GroundSet& ground, Subset s,
                                       int n, int i) {
  if (i < 0 || 2 * i > n) {
    throw Error("monomial symmetric function requires 0 <= 2i <= n");
  }
  std::map<Exponents, Rational> terms;
  for (Subset u : k_subsets(s, i)) {
    for (Subset v : k_subsets(s & ~u, n - 2 * i)) {
      terms.emplace(Exponents{.ones = v, .twos = u}, Rational(1));
    }
  }
  return BoundedExponentForm(ground, std::move(terms));
}

// ---------------------------------------------------------------------------
// Evaluation

Rational evaluate(const MultiaffinePoly& p, const RationalPoint& point) {
  require_same_ground(p.ground(), point.ground(), "evaluate");
  Rational total(0);
  for (const auto& [s, c] : p.terms()) {
    Rational term = c;
    for (int i : subset_indices(s)) {
      term *= point.value(i);
    }
    total += term;
  }
  return total;
}

Rational evaluate(const BoundedExponentForm& f, const RationalPoint& point) {
  require_same_ground(f.ground(), point.ground(), "evaluate");
  Rational total(0);
  for (const auto& [a, c] : f.terms()) {
    Rational term = c;
    for (int i : subset_indices(a.ones)) {
      term *= point.value(i);
    }
    for (int i : subset_indices(a.twos)) {
      term *= point.value(i) * point.value(i);
    }
    total += term;
  }
  return total;
}

}  // namespace rayleigh
