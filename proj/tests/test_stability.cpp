#include <doctest.h>

#include <string>
#include <vector>

#include "rayleigh/error.hpp"
#include "rayleigh/families.hpp"
#include "rayleigh/stability.hpp"

using namespace rayleigh;

namespace {

GroundSet numbered(int n, const std::string& prefix = "y") {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return GroundSet(std::move(labels));
}

}  // namespace

TEST_CASE("collapse of a fully symmetric polynomial") {
  const GroundSet g3 = numbered(3);
  const PartitionedGroundSet one_block(g3, {{"B", g3.full_mask()}});
  const BlockedPoly collapsed =
      gws_collapse(elementary_symmetric(g3, g3.full_mask(), 2), one_block);
  CHECK(collapsed.coefficient({2}) == 3);
  CHECK(collapsed.terms().size() == 1);
}

TEST_CASE("collapse of the two-flats enumerator gives binomial coefficients") {
  const TwoFlatSpec spec{3, 3, 2, 3, 2};
  const TwoFlatGround g = two_flat_ground(spec);
  const PartitionedGroundSet blocks(g.ground,
                                    {{"S", g.s_mask}, {"T", g.t_mask}});
  const BlockedPoly collapsed = gws_collapse(basis_enumerator(spec), blocks);
  CHECK(collapsed.coefficient({1, 2}) == 3);   // C(3,1) C(2,2)
  CHECK(collapsed.coefficient({2, 1}) == 6);   // C(3,2) C(2,1)
  CHECK(collapsed.coefficient({3, 0}) == 1);   // C(3,3) C(2,0)
  CHECK(collapsed.terms().size() == 3);
}

TEST_CASE("collapse rejects asymmetric polynomials") {
  const GroundSet g3 = numbered(3);
  // y1y2 + y1y3 is not invariant under swapping y1,y2
  std::map<Subset, Rational> terms = {{0b011, Rational(1)},
                                      {0b101, Rational(1)}};
  const MultiaffinePoly z(g3, std::move(terms));
  const PartitionedGroundSet one_block(g3, {{"B", g3.full_mask()}});
  CHECK_THROWS_WITH_AS(gws_collapse(z, one_block),
                       "polynomial not pi-symmetric", Error);
}

TEST_CASE("characteristic polynomial of two-flats instances") {
  const UnivariateRationalPoly p17 =
      characteristic_poly(TwoFlatSpec{3, 3, 2, 17, 5});
  CHECK(p17.coefficients() ==
        std::vector<Rational>{Rational(170), Rational(680), Rational(680)});

  const UnivariateRationalPoly p18 =
      characteristic_poly(TwoFlatSpec{3, 3, 2, 18, 5});
  CHECK(p18.coefficients() ==
        std::vector<Rational>{Rational(180), Rational(765), Rational(816)});

  // degenerate s+t = r: a single constant term
  const UnivariateRationalPoly direct =
      characteristic_poly(TwoFlatSpec{4, 2, 2, 5, 6});
  CHECK(direct.degree() == 0);
  CHECK(is_real_rooted(direct));
}

TEST_CASE("quadratic criterion matches the documented instances") {
  CHECK(quadratic_criterion(TwoFlatSpec{3, 3, 2, 17, 5}));
  CHECK_FALSE(quadratic_criterion(TwoFlatSpec{3, 3, 2, 18, 5}));
  CHECK(quadratic_criterion(TwoFlatSpec{4, 4, 2, 11, 3}));
  CHECK_THROWS_WITH_AS(quadratic_criterion(TwoFlatSpec{3, 2, 2, 5, 5}),
                       "criterion applies only when s+t=r+2", Error);
}

TEST_CASE("threshold values against the published grid") {
  CHECK(threshold_A(3, 1).infinite);
  CHECK(threshold_A(3, 2).infinite);
  CHECK(threshold_A(4, 1).infinite);
  CHECK_FALSE(threshold_A(3, 3).infinite);
  CHECK(threshold_A(3, 3).value == 17);
  CHECK(threshold_A(5, 1).value == 19);
  CHECK(threshold_A(4, 2).value == 11);
  CHECK(threshold_A(12, 1).value == make_rational(31, 2));
  CHECK(rational_floor(threshold_A(12, 1).value) == 15);
  CHECK_THROWS_AS(threshold_A(2, 1), Error);
  CHECK_THROWS_AS(threshold_A(3, 0), Error);
}

TEST_CASE("threshold table matches the published 10x12 grid") {
  // rows r = 3..12, columns ell = 1..12; 0 denotes an infinite cell
  const int expected[10][12] = {
      {0, 0, 17, 11, 9, 8, 7, 7, 6, 6, 6, 6},
      {0, 11, 8, 7, 6, 6, 6, 5, 5, 5, 5, 5},
      {19, 9, 7, 7, 6, 6, 6, 6, 6, 6, 6, 6},
      {14, 9, 8, 7, 7, 7, 7, 7, 6, 6, 6, 6},
      {13, 9, 8, 8, 8, 8, 7, 7, 7, 7, 7, 7},
      {13, 10, 9, 9, 9, 8, 8, 8, 8, 8, 8, 8},
      {13, 11, 10, 10, 9, 9, 9, 9, 9, 9, 9, 9},
      {14, 11, 11, 11, 10, 10, 10, 10, 10, 10, 10, 10},
      {14, 12, 12, 11, 11, 11, 11, 11, 11, 11, 11, 11},
      {15, 13, 13, 12, 12, 12, 12, 12, 12, 12, 12, 12}};
  const auto grid = table_A(3, 12, 1, 12);
  REQUIRE(grid.size() == 10);
  for (int row = 0; row < 10; ++row) {
    REQUIRE(grid[row].size() == 12);
    for (int col = 0; col < 12; ++col) {
      const TableCell& cell = grid[static_cast<std::size_t>(row)]
                                  [static_cast<std::size_t>(col)];
      if (expected[row][col] == 0) {
        CHECK(cell.infinite);
      } else {
        CHECK_FALSE(cell.infinite);
        CHECK(cell.floor_value == expected[row][col]);
      }
    }
  }
  // spot cells
  CHECK(table_A(7, 7, 4, 4)[0][0].floor_value == 8);
  CHECK(table_A(9, 9, 5, 5)[0][0].floor_value == 9);
  CHECK_THROWS_AS(table_A(2, 3, 1, 2), Error);
}

TEST_CASE("strong Rayleigh decisions") {
  const Decision boundary = is_strongly_rayleigh(LinePlusFreeSpec{3, 3, 17});
  CHECK(boundary.strongly_rayleigh);
  CHECK(boundary.path == "threshold");

  const Decision past = is_strongly_rayleigh(LinePlusFreeSpec{3, 3, 18});
  CHECK_FALSE(past.strongly_rayleigh);

  const Decision uniform = is_strongly_rayleigh(UniformSpec{4, 9});
  CHECK(uniform.strongly_rayleigh);
  CHECK(uniform.path == "uniform");

  const Decision flats = is_strongly_rayleigh(TwoFlatSpec{3, 3, 2, 18, 5});
  CHECK_FALSE(flats.strongly_rayleigh);
  CHECK(flats.path == "real-rootedness");
  CHECK(flats.detail == "P_M not real-rooted");

  CHECK(is_strongly_rayleigh(TwoFlatSpec{4, 2, 2, 5, 6}).path == "direct-sum");
  CHECK(is_strongly_rayleigh(TwoFlatSpec{4, 3, 2, 5, 6}).path == "two-sum");
  CHECK(is_strongly_rayleigh(LinePlusFreeSpec{3, 2, 40}).path ==
        "threshold-infinite");
  CHECK(is_strongly_rayleigh(LinePlusFreeSpec{4, 0, 9}).path ==
        "uniform-degenerate");
  CHECK_THROWS_AS(is_strongly_rayleigh(LinePlusFreeSpec{2, 1, 4}), Error);

  const std::string json = boundary.to_json();
  CHECK(json.find("\"decision\":\"strongly-rayleigh\"") != std::string::npos);
  CHECK(json.find("\"path\":\"threshold\"") != std::string::npos);
}

TEST_CASE("the three decision routes agree on quadratic two-flats instances") {
  // line(r, ell, a) is twoflats(r, r, 2, a, ell+2) once a >= r
  for (int r = 3; r <= 6; ++r) {
    for (int ell = 1; ell <= 4; ++ell) {
      const Threshold threshold = threshold_A(r, ell);
      const int a_hi =
          threshold.infinite
              ? r + 8
              : static_cast<int>(rational_floor(threshold.value).get_si()) + 3;
      for (int a = r; a <= a_hi; ++a) {
        const TwoFlatSpec flats{r, r, 2, a, ell + 2};
        const bool by_quadratic = quadratic_criterion(flats);
        const bool by_sturm = is_real_rooted(characteristic_poly(flats));
        const bool by_threshold =
            threshold.infinite || Rational(a) <= threshold.value;
        CHECK(by_quadratic == by_sturm);
        CHECK(by_sturm == by_threshold);
        CHECK(is_strongly_rayleigh(flats).strongly_rayleigh == by_threshold);
        CHECK(is_strongly_rayleigh(LinePlusFreeSpec{r, ell, a})
                  .strongly_rayleigh == by_threshold);
      }
    }
  }
}

TEST_CASE("collapse of the two-flats enumerator matches the characteristic poly") {
  // after factoring out the T-variable power, the block collapse and the
  // characteristic polynomial list the same coefficients
  for (const TwoFlatSpec spec :
       {TwoFlatSpec{3, 3, 2, 5, 4}, TwoFlatSpec{4, 3, 2, 6, 3},
        TwoFlatSpec{5, 4, 3, 6, 5}}) {
    const TwoFlatGround g = two_flat_ground(spec);
    const PartitionedGroundSet blocks(g.ground,
                                      {{"S", g.s_mask}, {"T", g.t_mask}});
    const BlockedPoly collapsed = gws_collapse(basis_enumerator(spec), blocks);
    const UnivariateRationalPoly characteristic = characteristic_poly(spec);
    for (int i = spec.r - spec.t; i <= spec.s; ++i) {
      CHECK(collapsed.coefficient({i, spec.r - i}) ==
            characteristic.coefficient(i - (spec.r - spec.t)));
    }
  }
}

TEST_CASE("witness search finds documented failures and respects soundness") {
  const WitnessSearchResult found = negativity_witness(LinePlusFreeSpec{3, 3, 18});
  REQUIRE(found.witness.has_value());
  CHECK(found.witness->stage == "symmetric-slice");
  CHECK(found.witness->value < 0);
  // the witness value is the exact evaluation of the Rayleigh difference
  CHECK(evaluate(rayleigh_closed_form(LinePlusFreeSpec{3, 3, 18}),
                 found.witness->point) == found.witness->value);

  CHECK_FALSE(negativity_witness(LinePlusFreeSpec{3, 3, 17}).witness.has_value());
  CHECK_FALSE(negativity_witness(LinePlusFreeSpec{3, 1, 5}).witness.has_value());
}

TEST_CASE("witness search is deterministic for a fixed seed") {
  const WitnessSearchResult first = negativity_witness(LinePlusFreeSpec{3, 3, 18}, 0);
  const WitnessSearchResult second = negativity_witness(LinePlusFreeSpec{3, 3, 18}, 0);
  REQUIRE(first.witness.has_value());
  REQUIRE(second.witness.has_value());
  CHECK(first.witness->value == second.witness->value);
  CHECK(first.stage_log == second.stage_log);
}
