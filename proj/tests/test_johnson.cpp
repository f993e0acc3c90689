#include <doctest.h>

#include "rayleigh/error.hpp"
#include "rayleigh/johnson.hpp"
#include "rayleigh/rational.hpp"

using namespace rayleigh;

TEST_CASE("scheme construction and vertex order") {
  const JohnsonScheme j42 = make_johnson(4, 2);
  CHECK(j42.vertex_count() == 6);
  CHECK(j42.s() == 2);
  // colexicographic order is ascending mask order
  for (int i = 1; i < j42.vertex_count(); ++i) {
    CHECK(j42.vertices[static_cast<std::size_t>(i - 1)] <
          j42.vertices[static_cast<std::size_t>(i)]);
  }
  CHECK_THROWS_AS(make_johnson(3, 4), Error);
  CHECK_THROWS_AS(make_johnson(40, 20), SizeError);
}

TEST_CASE("adjacency matrices of small schemes") {
  const JohnsonScheme j32 = make_johnson(3, 2);
  const RationalSymMatrix a1 = johnson_adjacency(j32, 1);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(a1.at(i, j) == (i == j ? 0 : 1));  // J - I
    }
  }

  const JohnsonScheme j42 = make_johnson(4, 2);
  const RationalSymMatrix a0 = johnson_adjacency(j42, 0);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      CHECK(a0.at(i, j) == (i == j ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(johnson_adjacency(j42, 3), Error);
}

TEST_CASE("adjacency row sums are the scheme valencies") {
  for (int v = 2; v <= 7; ++v) {
    for (int d = 1; d < v; ++d) {
      const JohnsonScheme scheme = make_johnson(v, d);
      for (int k = 0; k <= scheme.s(); ++k) {
        const RationalSymMatrix ak = johnson_adjacency(scheme, k);
        const Rational valency(binomial(d, d - k) * binomial(v - d, k));
        for (int i = 0; i < scheme.vertex_count(); ++i) {
          CHECK(ak.row_sum(i) == valency);
        }
      }
    }
  }
}

TEST_CASE("adjacency matrices resolve the identity and all-ones matrices") {
  for (int v = 2; v <= 6; ++v) {
    for (int d = 1; d < v; ++d) {
      const JohnsonScheme scheme = make_johnson(v, d);
      const int n = scheme.vertex_count();
      RationalSymMatrix total(n);
      for (int k = 0; k <= scheme.s(); ++k) {
        const RationalSymMatrix ak = johnson_adjacency(scheme, k);
        for (int i = 0; i < n; ++i) {
          for (int j = i; j < n; ++j) {
            total.set(i, j, total.at(i, j) + ak.at(i, j));
          }
        }
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          CHECK(total.at(i, j) == 1);
        }
      }
    }
  }
}

TEST_CASE("the weighted sum matrix matches its direct construction") {
  for (int v = 2; v <= 6; ++v) {
    for (int d = 1; d < v; ++d) {
      const JohnsonScheme scheme = make_johnson(v, d);
      const int n = scheme.vertex_count();
      RationalSymMatrix weighted(n);
      for (int k = 0; k <= scheme.s(); ++k) {
        const RationalSymMatrix ak = johnson_adjacency(scheme, k);
        const Rational coeff = make_rational(1, k + 1);
        for (int i = 0; i < n; ++i) {
          for (int j = i; j < n; ++j) {
            weighted.set(i, j, weighted.at(i, j) + coeff * ak.at(i, j));
          }
        }
      }
      CHECK(johnson_gram(scheme) == weighted);
    }
  }
}

TEST_CASE("documented gram values of small schemes") {
  const RationalSymMatrix g42 = johnson_gram(make_johnson(4, 2));
  CHECK(g42.row_sum(0) == make_rational(10, 3));
  CHECK(g42.row_sum(0) == make_rational(1, 3) * Rational(binomial(5, 2)));

  const RationalSymMatrix g32 = johnson_gram(make_johnson(3, 2));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(g32.at(i, j) == (i == j ? Rational(1) : make_rational(1, 2)));
    }
  }

  const RationalSymMatrix g21 = johnson_gram(make_johnson(2, 1));
  CHECK(g21.row_sum(0) == make_rational(3, 2));
}
