#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rayleigh/families.hpp"
#include "rayleigh/polynomial.hpp"
#include "rayleigh/univariate.hpp"

namespace rayleigh {

/// Polynomial in one variable per partition block, produced by the
/// Grace-Walsh-Szego substitution y_h -> x_B for h in block B.
class BlockedPoly {
 public:
  BlockedPoly(std::vector<std::string> block_names, std::vector<int> block_sizes,
              std::map<std::vector<int>, Rational> terms);

  const std::vector<std::string>& block_names() const { return names_; }
  const std::vector<int>& block_sizes() const { return sizes_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  Rational coefficient(const std::vector<int>& exponents) const;
  Rational operator()(const std::vector<Rational>& values) const;

  bool operator==(const BlockedPoly& o) const {
    return names_ == o.names_ && terms_ == o.terms_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> sizes_;
  std::map<std::vector<int>, Rational> terms_;
};

/// Collapses a block-symmetric multiaffine polynomial to one variable per
/// block. Throws Error("polynomial not pi-symmetric") if Z is not invariant
/// under the Young subgroup of the partition (checked via the adjacent
/// transpositions of every block).
BlockedPoly gws_collapse(const MultiaffinePoly& z,
                         const PartitionedGroundSet& partition);

/// The same substitution for bounded-exponent forms (block exponents may
/// reach twice the block size).
BlockedPoly gws_collapse(const BoundedExponentForm& f,
                         const PartitionedGroundSet& partition);

/// The univariate polynomial whose real-rootedness decides the strong
/// Rayleigh property of a two-flats matroid:
///   P(x) = sum_{i=r-t}^{s} C(a,i) C(b,r-i) x^{i-r+t}.
UnivariateRationalPoly characteristic_poly(const TwoFlatSpec& spec);

/// Discriminant criterion for the quadratic case s+t == r+2:
///   (a-s+2)(b-t+2) / ((a-s+1)(b-t+1))  >=  4(s-1)(t-1) / (st).
/// Throws Error unless s+t == r+2.
bool quadratic_criterion(const TwoFlatSpec& spec);

/// Free-point threshold for the line family. Infinite iff (r-2)ell <= 2,
/// otherwise the exact rational r + 2(r+ell+1)/((r-2)ell-2).
struct Threshold {
  bool infinite = false;
  Rational value;
};
Threshold threshold_A(int r, int ell);

/// Decision together with the reasoning path that produced it.
struct Decision {
  bool strongly_rayleigh = false;
  std::string path;    ///< uniform | direct-sum | two-sum | real-rootedness |
                       ///< uniform-degenerate | threshold-infinite | threshold
  std::string detail;  ///< human-readable supporting facts
  std::string to_json() const;  ///< {"decision":..., "path":..., "detail":...}
};

/// Decides the strong Rayleigh property of a family member.
Decision is_strongly_rayleigh(const FamilySpec& spec);

/// One threshold table cell: floor of the exact threshold, or infinite.
struct TableCell {
  bool infinite = false;
  Integer floor_value;
};

/// Grid of threshold cells for r in [rmin,rmax], ell in [lmin,lmax].
std::vector<std::vector<TableCell>> table_A(int rmin, int rmax, int lmin,
                                            int lmax);

/// A rational point where the Rayleigh difference is strictly negative.
struct Witness {
  RationalPoint point;
  Rational value;
  std::string stage;  ///< symmetric-slice | two-value-slice | random
};

struct WitnessSearchResult {
  std::optional<Witness> witness;
  std::vector<std::string> stage_log;
};

/// Staged deterministic search for a negativity witness of the Rayleigh
/// difference of {e,f} in the line family: (i) the fully symmetric slice,
/// reduced to a quadratic; (ii) two-value slices on the free points;
/// (iii) seeded random rational points.
WitnessSearchResult negativity_witness(const LinePlusFreeSpec& spec,
                                       std::uint64_t seed = 0);

}  // namespace rayleigh
