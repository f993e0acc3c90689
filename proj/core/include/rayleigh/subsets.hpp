#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rayleigh {

// A subset of a ground set with at most 64 elements, as a bitmask over the
// ground's element indices.
using Subset = std::uint64_t;

inline int subset_size(Subset s) { return std::popcount(s); }

inline Subset subset_bit(int index) { return Subset{1} << index; }

inline bool subset_contains(Subset s, int index) {
  return (s & subset_bit(index)) != 0;
}

/// All k-element subsets of `pool`, in ascending mask order (colexicographic
/// on element indices). Empty for k < 0 or k > |pool|.
std::vector<Subset> k_subsets(Subset pool, int k);

/// Drops bit position `pos` and shifts higher bits down by one.
Subset collapse_position(Subset mask, int pos);

/// Indices of the set bits of `mask`, ascending.
std::vector<int> subset_indices(Subset mask);

}  // namespace rayleigh
