#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rayleigh/polynomial.hpp"

namespace rayleigh {

/// Uniform matroid U_{r,m}: rank r on m points.
struct UniformSpec {
  int r = 0;
  int m = 0;
  bool operator==(const UniformSpec&) const = default;
};

/// Rank-r matroid on two disjoint flats: S of rank s with a points and T of
/// rank t with b points, points otherwise in general position (bases are the
/// r-sets meeting S in at most s and T in at most t points).
struct TwoFlatSpec {
  int r = 0;
  int s = 0;
  int t = 0;
  int a = 0;
  int b = 0;
  bool operator==(const TwoFlatSpec&) const = default;
};

/// Rank-r simple matroid with ell+2 collinear points (the line L plus the
/// designated pair e,f) and a free points in general position off the line.
struct LinePlusFreeSpec {
  int r = 0;
  int ell = 0;
  int a = 0;
  bool operator==(const LinePlusFreeSpec&) const = default;
};

using FamilySpec = std::variant<UniformSpec, TwoFlatSpec, LinePlusFreeSpec>;

/// All violated invariants, as human-readable messages. Empty means valid.
std::vector<std::string> validate(const UniformSpec& spec);
std::vector<std::string> validate(const TwoFlatSpec& spec);
std::vector<std::string> validate(const LinePlusFreeSpec& spec);
std::vector<std::string> validate(const FamilySpec& spec);

/// Throws Error listing all violations if the spec is invalid.
void require_valid(const FamilySpec& spec);

/// Ground sets and block structure of a line-plus-free-points instance.
/// Elements are named a1..aN (free points), p1..pell (line), e, f.
struct LineGround {
  GroundSet full;     ///< a1..aN, p1..pell, e, f
  GroundSet reduced;  ///< a1..aN, p1..pell (the set H = A u L)
  Subset free_mask = 0;  ///< A block within `reduced`
  Subset line_mask = 0;  ///< L block within `reduced`
};
LineGround line_ground(const LinePlusFreeSpec& spec);

/// Ground set of a two-flats instance: s1..sa then t1..tb, with block masks.
struct TwoFlatGround {
  GroundSet ground;
  Subset s_mask = 0;
  Subset t_mask = 0;
};
TwoFlatGround two_flat_ground(const TwoFlatSpec& spec);

/// Ground set of a uniform instance: x1..xm.
GroundSet uniform_ground(const UniformSpec& spec);

/// Basis enumerator e_r(E) of the uniform matroid.
MultiaffinePoly basis_enumerator(const UniformSpec& spec);

/// Basis enumerator sum over e_i(S) e_{r-i}(T) for the two-flats matroid.
MultiaffinePoly basis_enumerator(const TwoFlatSpec& spec);

/// Basis enumerator
///   e_r(A) + e_1(L u {e,f}) e_{r-1}(A) + e_2(L u {e,f}) e_{r-2}(A)
/// of the line-plus-free-points matroid, on the full ground set.
MultiaffinePoly basis_enumerator(const LinePlusFreeSpec& spec);

/// Closed form of the Rayleigh difference of {e,f} in the line family, on
/// the reduced ground A u L. With d = r-1:
///   sum_k  C(2k,k)/(k+1)        * m_[2d,   d-k  ](A)
/// + m_1(L)            * sum_k>0 C(2k-1,k) * m_[2d-1, d-k  ](A)
/// + (m_2(L)+m_11(L))  * sum_k   C(2k,k)   * m_[2d-2, d-1-k](A).
BoundedExponentForm rayleigh_closed_form(const LinePlusFreeSpec& spec);

/// Two-block partition (A and L) of the reduced line ground; single block
/// when ell == 0.
PartitionedGroundSet line_partition(const LinePlusFreeSpec& spec);

/// JSON text for a family spec, e.g. {"family":"line","r":3,"ell":1,"a":3}.
std::string family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const std::string& text);

/// One-line human description, e.g. "line(r=3, ell=1, a=3)".
std::string family_name(const FamilySpec& spec);

}  // namespace rayleigh
