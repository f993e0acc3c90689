#include "rayleigh/johnson.hpp"

#include "rayleigh/error.hpp"
#include "rayleigh/rational.hpp"

namespace rayleigh {

JohnsonScheme make_johnson(int v, int d) {
  if (d < 0 || v < d || v > 64) {
    throw Error("Johnson scheme requires 0 <= d <= v <= 64");
  }
  if (binomial(v, d) > 20000) {
    throw SizeError("Johnson scheme J(" + std::to_string(v) + "," +
                    std::to_string(d) + ") exceeds 20000 vertices");
  }
  const Subset pool = (v == 64) ? ~Subset{0} : (subset_bit(v) - 1);
  return JohnsonScheme{v, d, k_subsets(pool, d)};
}

RationalSymMatrix johnson_adjacency(const JohnsonScheme& scheme, int k) {
  if (k < 0 || k > scheme.s()) {
    throw Error("adjacency index k must satisfy 0 <= k <= min(d, v-d)");
  }
  const int n = scheme.vertex_count();
  RationalSymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int meet = subset_size(scheme.vertices[static_cast<std::size_t>(i)] &
                                   scheme.vertices[static_cast<std::size_t>(j)]);
      if (meet == scheme.d - k) {
        out.set(i, j, Rational(1));
      }
    }
  }
  return out;
}

RationalSymMatrix johnson_gram(const JohnsonScheme& scheme) {
  const int n = scheme.vertex_count();
  RationalSymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int k =
          scheme.d -
          subset_size(scheme.vertices[static_cast<std::size_t>(i)] &
                      scheme.vertices[static_cast<std::size_t>(j)]);
      out.set(i, j, make_rational(1, k + 1));
    }
  }
  return out;
}

}  // namespace rayleigh
