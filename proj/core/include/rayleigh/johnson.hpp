#pragma once

#include <vector>

#include "rayleigh/matrix.hpp"
#include "rayleigh/subsets.hpp"

namespace rayleigh {

/// Johnson association scheme J(v,d): vertices are the d-subsets of a
/// v-element set, in colexicographic order; two vertices are k-related when
/// their intersection has size d-k, for 0 <= k <= s = min(d, v-d).
struct JohnsonScheme {
  int v = 0;
  int d = 0;
  std::vector<Subset> vertices;

  int s() const { return std::min(d, v - d); }
  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

/// Builds J(v,d). Requires 0 <= d <= v <= 64; refuses more than 20000
/// vertices.
JohnsonScheme make_johnson(int v, int d);

/// k-th adjacency matrix A_k: entry (S,T) is 1 iff |S n T| = d-k.
RationalSymMatrix johnson_adjacency(const JohnsonScheme& scheme, int k);

/// The positive semidefinite matrix sum_k A_k/(k+1). The all-ones vector is
/// an eigenvector with eigenvalue C(v+1,d)/(d+1).
RationalSymMatrix johnson_gram(const JohnsonScheme& scheme);

}  // namespace rayleigh
