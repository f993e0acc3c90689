#pragma once

#include <vector>

#include "rayleigh/rational.hpp"

namespace rayleigh {

/// Dense symmetric matrix over exact rationals. Writes through set() keep
/// the matrix exactly symmetric.
class RationalSymMatrix {
 public:
  explicit RationalSymMatrix(int dimension);

  int dim() const { return n_; }
  const Rational& at(int i, int j) const;
  void set(int i, int j, Rational value);

  Rational row_sum(int i) const;

  bool operator==(const RationalSymMatrix& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }

 private:
  int n_ = 0;
  std::vector<Rational> entries_;  // row-major, full storage
};

/// Pivoted LDL^T factorization over exact rationals: P^T M P = L D L^T with
/// L unit lower triangular. For positive semidefinite input the
/// factorization is complete; otherwise it is partial, ending at the
/// offending pivot.
struct LDLFactorization {
  std::vector<int> perm;                        ///< perm[k] = original index of pivot k
  std::vector<std::vector<Rational>> unit_lower;  ///< L, in pivot order
  std::vector<Rational> diag;                   ///< D

  /// Recomputes P^T M P from L and D (for verification).
  RationalSymMatrix reconstruct() const;
};

/// Exact PSD test by pivoted LDL^T: the pivot with the greatest absolute
/// diagonal entry is eliminated first; when every remaining diagonal entry
/// is zero the matrix is PSD iff the rest of the reduced matrix vanishes.
/// Returns the PSD flag and the (possibly partial) factorization.
std::pair<bool, LDLFactorization> ldl_psd_check(const RationalSymMatrix& m);

}  // namespace rayleigh
