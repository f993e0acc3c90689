#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rayleigh/certificates.hpp"
#include "rayleigh/families.hpp"
#include "rayleigh/matrix.hpp"
#include "rayleigh/polynomial.hpp"

namespace rayleigh {

// Brute-force cross-checks of every closed-form coefficient formula, by
// direct enumeration on small instances. Kept deliberately independent of
// the code paths they validate.

enum class CoefficientCaseTag { C1, C2, C3, C4, C5 };

/// Classified coefficient index of the line-family Rayleigh difference:
/// squared = the variables with exponent 2, linear = those with exponent 1
/// (|linear| = 2k).
struct CoefficientCase {
  Subset squared = 0;
  Subset linear = 0;
  int k = 0;
  CoefficientCaseTag tag = CoefficientCaseTag::C5;
};

/// Classifies (U,V) against the free/line split. Throws Error if U and V
/// overlap or |V| is odd.
CoefficientCase classify_coefficient_case(Subset squared, Subset linear,
                                          Subset free_mask, Subset line_mask);

/// Coefficient value of the case:
///   C1 -> C(2k,k)/(k+1), C2 -> C(2k-1,k), C3 -> C(2k-2,k-1),
///   C4 -> C(2k,k), C5 -> 0.
Rational coefficient_case_value(const CoefficientCase& c);

/// Expands the Rayleigh difference of {e,f} from the basis enumerator and
/// checks every coefficient (including absent ones) against the case table.
/// Requires r <= 5, ell <= 3, a <= 7.
bool check_delta_cases(const LinePlusFreeSpec& spec);

/// Checks e_d^2 - e_{d-1} e_{d+1} == sum_k C(2k,k)/(k+1) m_[2d,d-k] on an
/// hsize-element ground. Requires d <= hsize <= 8.
bool check_uniform_monomial_expansion(int d, int hsize);

/// Checks sum_j C(d-j,k) == C(d+1,k+1) and
/// sum_k C(d+1,d-k) C(v-d,k) == C(v+1,d) for all parameters up to `bound`
/// (at most 30), with the left sides computed from a locally built Pascal
/// triangle.
bool check_binomial_identities(int bound);

/// Replaces every entry by the mean over its orbit class. Preserves
/// positive semidefiniteness and fixes orbit-constant matrices.
RationalSymMatrix symmetrize_gram(
    const RationalSymMatrix& m,
    const std::function<OrbitKey(int, int)>& orbit);

struct SampleWitness {
  RationalPoint point;
  Rational value;
};

/// Evaluates the form at `trials` seeded random rational points in
/// [-10,10]^ground; returns the first strictly negative evaluation.
std::optional<SampleWitness> sample_nonnegativity(const BoundedExponentForm& f,
                                                  int trials,
                                                  std::uint64_t seed);

struct SelfTestReport {
  struct Entry {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Entry> entries;

  bool all_pass() const;
  std::string to_json() const;
};

/// Runs the cross-check suites on the reduced (quick) or full grids.
SelfTestReport run_selftest(bool full);

}  // namespace rayleigh
