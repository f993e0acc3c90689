#include "rayleigh/stability.hpp"

#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "rayleigh/error.hpp"

namespace rayleigh {

namespace {

// Applies the transposition of ground positions i and j to a subset.
Subset transpose_subset(Subset s, int i, int j) {
  const bool has_i = subset_contains(s, i);
  const bool has_j = subset_contains(s, j);
  if (has_i == has_j) return s;
  return s ^ (subset_bit(i) | subset_bit(j));
}

// Verifies invariance of the term map under all adjacent transpositions
// within each block (these generate the full Young subgroup).
template <typename TermMap, typename Transpose>
bool pi_symmetric(const TermMap& terms, const PartitionedGroundSet& partition,
                  Transpose&& transpose) {
  for (const auto& [name, mask] : partition.blocks()) {
    const std::vector<int> positions = subset_indices(mask);
    for (std::size_t k = 0; k + 1 < positions.size(); ++k) {
      for (const auto& [key, coeff] : terms) {
        const auto image = transpose(key, positions[k], positions[k + 1]);
        const auto it = terms.find(image);
        if (it == terms.end() || it->second != coeff) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> block_exponents(const PartitionedGroundSet& partition,
                                 Subset ones, Subset twos) {
  std::vector<int> exps;
  exps.reserve(partition.blocks().size());
  for (const auto& [name, mask] : partition.blocks()) {
    exps.push_back(subset_size(ones & mask) + 2 * subset_size(twos & mask));
  }
  return exps;
}

BlockedPoly make_blocked(const PartitionedGroundSet& partition,
                         std::map<std::vector<int>, Rational> terms) {
  std::vector<std::string> names;
  std::vector<int> sizes;
  for (const auto& [name, mask] : partition.blocks()) {
    names.push_back(name);
    sizes.push_back(subset_size(mask));
  }
  return BlockedPoly(std::move(names), std::move(sizes), std::move(terms));
}

// Deterministic cross-platform integer in [lo, hi] from a raw 64-bit stream.
long next_long(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

// Random rational in [-10, 10] with small denominator.
Rational random_rational(std::mt19937_64& rng) {
  const long den = next_long(rng, 1, 8);
  const long num = next_long(rng, -10 * den, 10 * den);
  return make_rational(num, den);
}

}  // namespace

// ---------------------------------------------------------------------------
// BlockedPoly

BlockedPoly::BlockedPoly(std::vector<std::string> block_names,
                         std::vector<int> block_sizes,
                         std::map<std::vector<int>, Rational> terms)
    : names_(std::move(block_names)),
      sizes_(std::move(block_sizes)),
      terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != names_.size()) {
      throw Error("block exponent vector has wrong length");
    }
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  }
}

Rational BlockedPoly::coefficient(const std::vector<int>& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational BlockedPoly::operator()(const std::vector<Rational>& values) const {
  if (values.size() != names_.size()) {
    throw Error("blocked evaluation needs one value per block");
  }
  Rational total(0);
  for (const auto& [exps, coeff] : terms_) {
    Rational term = coeff;
    for (std::size_t b = 0; b < exps.size(); ++b) {
      for (int k = 0; k < exps[b]; ++k) term *= values[b];
    }
    total += term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Grace-Walsh-Szego collapse

BlockedPoly gws_collapse(const MultiaffinePoly& z,
                         const PartitionedGroundSet& partition) {
  if (!(z.ground() == partition.ground())) {
    throw Error("partition does not match the polynomial's ground set");
  }
  const auto transpose = [](Subset s, int i, int j) {
    return transpose_subset(s, i, j);
  };
  if (!pi_symmetric(z.terms(), partition, transpose)) {
    throw Error("polynomial not pi-symmetric");
  }
  std::map<std::vector<int>, Rational> terms;
  for (const auto& [s, c] : z.terms()) {
    terms[block_exponents(partition, s, 0)] += c;
  }
  return make_blocked(partition, std::move(terms));
}

BlockedPoly gws_collapse(const BoundedExponentForm& f,
                         const PartitionedGroundSet& partition) {
  if (!(f.ground() == partition.ground())) {
    throw Error("partition does not match the form's ground set");
  }
  const auto transpose = [](const Exponents& a, int i, int j) {
    return Exponents{.ones = transpose_subset(a.ones, i, j),
                     .twos = transpose_subset(a.twos, i, j)};
  };
  if (!pi_symmetric(f.terms(), partition, transpose)) {
    throw Error("polynomial not pi-symmetric");
  }
  std::map<std::vector<int>, Rational> terms;
  for (const auto& [a, c] : f.terms()) {
    terms[block_exponents(partition, a.ones, a.twos)] += c;
  }
  return make_blocked(partition, std::move(terms));
}

// ---------------------------------------------------------------------------
// Two-flats decision machinery

UnivariateRationalPoly characteristic_poly(const TwoFlatSpec& spec) {
  require_valid(spec);
  std::vector<Rational> coeffs(
      static_cast<std::size_t>(spec.s - (spec.r - spec.t)) + 1, Rational(0));
  for (int i = spec.r - spec.t; i <= spec.s; ++i) {
    coeffs[static_cast<std::size_t>(i - (spec.r - spec.t))] =
        Rational(binomial(spec.a, i) * binomial(spec.b, spec.r - i));
  }
  return UnivariateRationalPoly(std::move(coeffs));
}

bool quadratic_criterion(const TwoFlatSpec& spec) {
  require_valid(spec);
  if (spec.s + spec.t != spec.r + 2) {
    throw Error("criterion applies only when s+t=r+2");
  }
  const Rational lhs =
      make_rational(static_cast<long>(spec.a - spec.s + 2) *
                        (spec.b - spec.t + 2),
                    static_cast<long>(spec.a - spec.s + 1) *
                        (spec.b - spec.t + 1));
  const Rational rhs =
      make_rational(4L * (spec.s - 1) * (spec.t - 1),
                    static_cast<long>(spec.s) * spec.t);
  return lhs >= rhs;
}

Threshold threshold_A(int r, int ell) {
  if (r < 3 || ell < 1) {
    throw Error("threshold requires r >= 3 and ell >= 1");
  }
  const long denom = static_cast<long>(r - 2) * ell - 2;
  if (denom <= 0) {
    return Threshold{.infinite = true, .value = Rational(0)};
  }
  return Threshold{.infinite = false,
                   .value = Rational(r) +
                            make_rational(2L * (r + ell + 1), denom)};
}

// ---------------------------------------------------------------------------
// Decisions

std::string Decision::to_json() const {
  nlohmann::json j;
  j["decision"] = strongly_rayleigh ? "strongly-rayleigh" : "not-strongly-rayleigh";
  j["path"] = path;
  j["detail"] = detail;
  return j.dump();
}

namespace {

Decision decide(const UniformSpec& spec) {
  require_valid(FamilySpec(spec));
  return Decision{true, "uniform", "uniform matroids are strongly Rayleigh"};
}

Decision decide(const TwoFlatSpec& spec) {
  require_valid(FamilySpec(spec));
  if (spec.s + spec.t == spec.r) {
    return Decision{true, "direct-sum",
                    "s+t = r: direct sum of uniform matroids"};
  }
  if (spec.s + spec.t == spec.r + 1) {
    return Decision{true, "two-sum", "s+t = r+1: two-sum of uniform matroids"};
  }
  const bool rooted = is_real_rooted(characteristic_poly(spec));
  return Decision{rooted, "real-rootedness",
                  rooted ? "P_M real-rooted" : "P_M not real-rooted"};
}

Decision decide(const LinePlusFreeSpec& spec) {
  require_valid(FamilySpec(spec));
  if (spec.ell == 0) {
    return Decision{true, "uniform-degenerate",
                    "ell = 0 degenerates to the uniform matroid U(" +
                        std::to_string(spec.r) + "," +
                        std::to_string(spec.a + 2) + ")"};
  }
  const Threshold threshold = threshold_A(spec.r, spec.ell);
  std::ostringstream detail;
  if (threshold.infinite) {
    detail << "(r-2)ell <= 2: threshold A(" << spec.r << "," << spec.ell
           << ") is infinite";
    return Decision{true, "threshold-infinite", detail.str()};
  }
  const bool within = Rational(spec.a) <= threshold.value;
  detail << "a = " << spec.a << (within ? " <= " : " > ") << "A(" << spec.r
         << "," << spec.ell << ") = " << fraction_string(threshold.value)
         << " (" << decimal_string(threshold.value) << ")";
  return Decision{within, "threshold", detail.str()};
}

}  // namespace

Decision is_strongly_rayleigh(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return decide(s); }, spec);
}

std::vector<std::vector<TableCell>> table_A(int rmin, int rmax, int lmin,
                                            int lmax) {
  if (rmin < 3 || lmin < 1 || rmin > rmax || lmin > lmax) {
    throw Error("table ranges require 3 <= rmin <= rmax and 1 <= lmin <= lmax");
  }
  std::vector<std::vector<TableCell>> grid;
  for (int r = rmin; r <= rmax; ++r) {
    std::vector<TableCell> row;
    for (int ell = lmin; ell <= lmax; ++ell) {
      const Threshold threshold = threshold_A(r, ell);
      if (threshold.infinite) {
        row.push_back(TableCell{.infinite = true, .floor_value = Integer(0)});
      } else {
        row.push_back(TableCell{.infinite = false,
                                .floor_value = rational_floor(threshold.value)});
      }
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Negativity witness search

namespace {

RationalPoint expand_block_point(const PartitionedGroundSet& partition,
                                 const std::vector<Rational>& block_values) {
  const GroundSet& ground = partition.ground();
  std::vector<Rational> values(static_cast<std::size_t>(ground.size()),
                               Rational(0));
  for (std::size_t b = 0; b < partition.blocks().size(); ++b) {
    for (int i : subset_indices(partition.blocks()[b].second)) {
      values[static_cast<std::size_t>(i)] = block_values[b];
    }
  }
  return RationalPoint(ground, std::move(values));
}

// Stage (i): on the slice y_A = alpha, y_L = 1 the difference factors as
// alpha^(2d-2) (c1 alpha^2 + c2 alpha + c3); a strictly negative value
// exists iff the discriminant of the quadratic factor is positive, and the
// vertex alpha = -c2/(2 c1) realizes it.
std::optional<Witness> symmetric_slice_witness(
    const LinePlusFreeSpec& spec, const BoundedExponentForm& delta,
    const PartitionedGroundSet& partition, std::vector<std::string>& log) {
  if (spec.ell == 0 || spec.a == 0) {
    log.push_back("symmetric-slice: degenerate block structure, skipped");
    return std::nullopt;
  }
  const BlockedPoly slice = gws_collapse(delta, partition);
  const int d = spec.r - 1;
  const Rational c1 = slice.coefficient({2 * d, 0});
  const Rational c2 = slice.coefficient({2 * d - 1, 1});
  const Rational c3 = slice.coefficient({2 * d - 2, 2});
  if (c1 <= 0) {
    // c1 = 0 forces c2 = 0 (both need a >= d free points); the slice is
    // then c3 >= 0 everywhere.
    log.push_back("symmetric-slice: quadratic degenerates, no witness");
    return std::nullopt;
  }
  const Rational disc = c2 * c2 - Rational(4) * c1 * c3;
  if (disc <= 0) {
    log.push_back("symmetric-slice: discriminant " + fraction_string(disc) +
                  " <= 0, slice is nonnegative");
    return std::nullopt;
  }
  const Rational alpha = -c2 / (Rational(2) * c1);
  RationalPoint point = expand_block_point(partition, {alpha, Rational(1)});
  const Rational value = evaluate(delta, point);
  if (value >= 0) {
    throw Error("internal error: slice vertex did not realize a negative value");
  }
  log.push_back("symmetric-slice: discriminant " + fraction_string(disc) +
                " > 0, witness at the vertex");
  return Witness{std::move(point), value, "symmetric-slice"};
}

// Stage (ii): split the free points into two groups of equal value.
std::optional<Witness> two_value_slice_witness(
    const LinePlusFreeSpec& spec, const BoundedExponentForm& delta,
    std::vector<std::string>& log) {
  if (spec.ell == 0 || spec.a < 2) {
    log.push_back("two-value-slice: no free-point split available, skipped");
    return std::nullopt;
  }
  const LineGround g = line_ground(spec);
  const std::vector<Rational> grid = {
      make_rational(-4, 1), make_rational(-3, 1), make_rational(-2, 1),
      make_rational(-3, 2), make_rational(-1, 1), make_rational(-3, 4),
      make_rational(-1, 2), make_rational(-1, 4), make_rational(1, 4),
      make_rational(1, 2),  make_rational(1, 1),  make_rational(2, 1)};
  const int max_split = std::min(spec.a - 1, 6);
  for (int j = 1; j <= max_split; ++j) {
    Subset first = 0;
    for (int i = 0; i < j; ++i) first |= subset_bit(i);
    const Subset second = g.free_mask & ~first;
    const PartitionedGroundSet partition(
        g.reduced,
        {{"A1", first}, {"A2", second}, {"L", g.line_mask}});
    const BlockedPoly collapsed = gws_collapse(delta, partition);
    for (const Rational& u : grid) {
      for (const Rational& v : grid) {
        // the form has even degree, so the line value can be fixed to 1
        if (collapsed({u, v, Rational(1)}) < 0) {
          RationalPoint point =
              expand_block_point(partition, {u, v, Rational(1)});
          const Rational value = evaluate(delta, point);
          log.push_back("two-value-slice: witness with split " +
                        std::to_string(j) + "/" + std::to_string(spec.a - j));
          return Witness{std::move(point), value, "two-value-slice"};
        }
      }
    }
  }
  log.push_back("two-value-slice: no negative value on the grid");
  return std::nullopt;
}

// Stage (iii): bounded seeded random search.
std::optional<Witness> random_witness(const BoundedExponentForm& delta,
                                      std::uint64_t seed, int trials,
                                      std::vector<std::string>& log) {
  std::mt19937_64 rng(seed);
  const GroundSet& ground = delta.ground();
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(ground.size()));
    for (int i = 0; i < ground.size(); ++i) {
      values.push_back(random_rational(rng));
    }
    RationalPoint point(ground, std::move(values));
    const Rational value = evaluate(delta, point);
    if (value < 0) {
      log.push_back("random: witness at trial " + std::to_string(trial));
      return Witness{std::move(point), value, "random"};
    }
  }
  log.push_back("random: no negative value in " + std::to_string(trials) +
                " trials");
  return std::nullopt;
}

}  // namespace

WitnessSearchResult negativity_witness(const LinePlusFreeSpec& spec,
                                       std::uint64_t seed) {
  require_valid(FamilySpec(spec));
  WitnessSearchResult result;
  const BoundedExponentForm delta = rayleigh_closed_form(spec);
  if (delta.is_zero()) {
    result.stage_log.push_back("Rayleigh difference is identically zero");
    return result;
  }
  const PartitionedGroundSet partition = line_partition(spec);

  result.witness =
      symmetric_slice_witness(spec, delta, partition, result.stage_log);
  if (result.witness) return result;

  result.witness = two_value_slice_witness(spec, delta, result.stage_log);
  if (result.witness) return result;

  result.witness = random_witness(delta, seed, 256, result.stage_log);
  return result;
}

}  // namespace rayleigh
