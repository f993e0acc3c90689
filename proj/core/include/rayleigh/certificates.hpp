#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rayleigh/families.hpp"
#include "rayleigh/matrix.hpp"
#include "rayleigh/polynomial.hpp"

namespace rayleigh {

/// Orbit invariant of a pair of d-subsets of H = A u L under the Young
/// subgroup Sym(L) x Sym(A): two pairs lie in the same orbit exactly when
/// their keys agree.
struct OrbitKey {
  int s_line = 0;       ///< |S n L|
  int t_line = 0;       ///< |T n L|
  int both_line = 0;    ///< |S n T n L|
  int both_free = 0;    ///< |S n T n A|
  auto operator<=>(const OrbitKey&) const = default;
};

OrbitKey orbit_key(Subset s, Subset t, Subset free_mask, Subset line_mask);

/// Symmetrized Gram matrix of the line family, indexed by the d-subsets of
/// the free points A (colex order) followed by the line points:
///   - (S,T) within A: 1/(k+1) where |S n T| = d-k,
///   - between A and a line point: 1/2,
///   - line diagonal 1, line off-diagonal 1/2.
/// Throws SizeError when C(a,d) exceeds 20000.
RationalSymMatrix gram_matrix(const LinePlusFreeSpec& spec);

/// Schur complement of the line block:  G - ell/(2 ell + 2) J  on the
/// A-subset block. Throws Error when ell == 0.
RationalSymMatrix schur_complement(const LinePlusFreeSpec& spec);

/// Closed-form PSD test of the Gram matrix:
///   C(a+1,d)/(d+1) >= ell/(2 ell+2) * C(a,d).
/// True iff the Rayleigh difference of {e,f} is a sum of squares.
bool psd_closed_form(const LinePlusFreeSpec& spec);

/// One square: weight * (sum_S coefficient_S y^S)^2 with |S| = d.
struct CertificateSummand {
  Rational weight;                 ///< nonnegative
  std::map<Subset, Rational> form; ///< keyed by d-subsets of the ground
};

/// Sum-of-squares certificate sum_i w_i q_i(y)^2 with exact rational data,
/// over the ground H = A u L (or an arbitrary ground for the uniform
/// construction).
struct SOSCertificate {
  GroundSet ground;
  int basis_degree = 0;  ///< d: every form is a linear span of d-subsets
  std::optional<LinePlusFreeSpec> family;  ///< present for line certificates
  std::vector<CertificateSummand> summands;
};

/// Certificate for the Rayleigh difference of {e,f} in the line family,
/// from the exact LDL^T factorization of the Gram matrix. Throws Error when
/// no certificate exists (the closed-form PSD test fails), SizeError past
/// the guardrail.
SOSCertificate build_certificate(const LinePlusFreeSpec& spec);

/// Certificate for e_d(H)^2 - e_{d-1}(H) e_{d+1}(H): one summand
/// (1/((d+1) C(d,j))) * (y^J e_{d-j}(H \ J))^2 per j-subset J, 0 <= j <= d.
SOSCertificate uniform_sos(int d, const GroundSet& h);

/// Expands sum_i w_i q_i^2 exactly.
BoundedExponentForm certificate_expansion(const SOSCertificate& cert);

/// True iff the certificate expands exactly to `target` (same ground
/// required; term maps compared key by key).
bool verify_certificate(const SOSCertificate& cert,
                        const BoundedExponentForm& target);

/// JSON round-trip:
///   {"family": {...}, "pair": ["e","f"], "basis_degree": d,
///    "summands": [{"weight": "p/q",
///                  "form": [{"subset": ["a1","a3"], "coeff": "p/q"}]}]}
std::string certificate_to_json(const SOSCertificate& cert);
SOSCertificate certificate_from_json(const std::string& text);

}  // namespace rayleigh
