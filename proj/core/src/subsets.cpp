#include "rayleigh/subsets.hpp"

namespace rayleigh {

namespace {

// Expands a mask over {0..m-1} to the positions listed in `positions`.
// Order-preserving in the numeric value of the mask.
Subset expand(Subset packed, const std::vector<int>& positions) {
  Subset out = 0;
  while (packed != 0) {
    const int bit = std::countr_zero(packed);
    out |= subset_bit(positions[static_cast<std::size_t>(bit)]);
    packed &= packed - 1;
  }
  return out;
}

}  // namespace

std::vector<Subset> k_subsets(Subset pool, int k) {
  std::vector<Subset> result;
  const int m = subset_size(pool);
  if (k < 0 || k > m) {
    return result;
  }
  if (k == 0) {
    result.push_back(0);
    return result;
  }
  const std::vector<int> positions = subset_indices(pool);
  // Gosper's hack over the packed m-bit space; expansion preserves order.
  Subset v = (Subset{1} << k) - 1;
  const Subset limit = Subset{1} << m;
  while (v < limit) {
    result.push_back(expand(v, positions));
    const Subset c = v & -v;
    const Subset r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return result;
}

Subset collapse_position(Subset mask, int pos) {
  const Subset low = mask & (subset_bit(pos) - 1);
  const Subset high = (mask >> (pos + 1)) << pos;
  return low | high;
}

std::vector<int> subset_indices(Subset mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(subset_size(mask)));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace rayleigh
