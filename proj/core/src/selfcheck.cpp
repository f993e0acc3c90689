#include "rayleigh/selfcheck.hpp"

#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "rayleigh/error.hpp"

namespace rayleigh {

namespace {

long next_long(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

Rational random_rational(std::mt19937_64& rng) {
  const long den = next_long(rng, 1, 8);
  const long num = next_long(rng, -10 * den, 10 * den);
  return make_rational(num, den);
}

}  // namespace

CoefficientCase classify_coefficient_case(Subset squared, Subset linear,
                                          Subset free_mask, Subset line_mask) {
  if ((squared & linear) != 0) {
    throw Error("coefficient case: squared and linear sets overlap");
  }
  if (((squared | linear) & ~(free_mask | line_mask)) != 0) {
    throw Error("coefficient case: variables outside the free/line split");
  }
  if (subset_size(linear) % 2 != 0) {
    throw Error("coefficient case: linear set must have even size");
  }
  CoefficientCase c;
  c.squared = squared;
  c.linear = linear;
  c.k = subset_size(linear) / 2;
  const int squared_on_line = subset_size(squared & line_mask);
  const int linear_on_line = subset_size(linear & line_mask);
  if (squared_on_line == 0 && linear_on_line == 0) {
    c.tag = CoefficientCaseTag::C1;
  } else if (squared_on_line == 0 && linear_on_line == 1) {
    c.tag = CoefficientCaseTag::C2;
  } else if (squared_on_line == 0 && linear_on_line == 2) {
    c.tag = CoefficientCaseTag::C3;
  } else if (squared_on_line == 1 && linear_on_line == 0) {
    c.tag = CoefficientCaseTag::C4;
  } else {
    c.tag = CoefficientCaseTag::C5;
  }
  return c;
}

Rational coefficient_case_value(const CoefficientCase& c) {
  const long k = c.k;
  switch (c.tag) {
    case CoefficientCaseTag::C1:
      return make_rational(binomial(2 * k, k), Integer(k + 1));
    case CoefficientCaseTag::C2:
      return Rational(binomial(2 * k - 1, k));
    case CoefficientCaseTag::C3:
      return Rational(binomial(2 * k - 2, k - 1));
    case CoefficientCaseTag::C4:
      return Rational(binomial(2 * k, k));
    case CoefficientCaseTag::C5:
      return Rational(0);
  }
  throw Error("coefficient case: unreachable tag");
}

bool check_delta_cases(const LinePlusFreeSpec& spec) {
  require_valid(FamilySpec(spec));
  if (spec.r > 5 || spec.ell > 3 || spec.a > 7) {
    throw SizeError("delta case check limited to r <= 5, ell <= 3, a <= 7");
  }
  const LineGround g = line_ground(spec);
  const BoundedExponentForm delta =
      rayleigh_difference(basis_enumerator(spec), "e", "f");
  if (!(delta.ground() == g.reduced)) {
    return false;
  }
  const int d = spec.r - 1;
  const Subset all = g.reduced.full_mask();
  for (int k = 0; k <= d; ++k) {
    for (Subset u : k_subsets(all, d - k)) {
      for (Subset v : k_subsets(all & ~u, 2 * k)) {
        const CoefficientCase c =
            classify_coefficient_case(u, v, g.free_mask, g.line_mask);
        const Rational expected = coefficient_case_value(c);
        if (delta.coefficient(Exponents{.ones = v, .twos = u}) != expected) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_uniform_monomial_expansion(int d, int hsize) {
  if (d < 0 || d > hsize || hsize > 8) {
    throw SizeError("uniform expansion check limited to 0 <= d <= hsize <= 8");
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= hsize; ++i) labels.push_back("h" + std::to_string(i));
  const GroundSet ground(std::move(labels));
  const Subset all = ground.full_mask();

  const MultiaffinePoly ed = elementary_symmetric(ground, all, d);
  const MultiaffinePoly ed_lo = elementary_symmetric(ground, all, d - 1);
  const MultiaffinePoly ed_hi = elementary_symmetric(ground, all, d + 1);
  const BoundedExponentForm lhs =
      multiply(ed, ed) - multiply(ed_lo, ed_hi);

  BoundedExponentForm rhs = BoundedExponentForm::zero(ground);
  for (int k = 0; k <= d; ++k) {
    const Rational coeff = make_rational(binomial(2 * k, k), Integer(k + 1));
    rhs = rhs + monomial_symmetric(ground, all, 2 * d, d - k) * coeff;
  }
  return lhs == rhs;
}

bool check_binomial_identities(int bound) {
  if (bound < 0 || bound > 30) {
    throw SizeError("binomial identity check limited to bound <= 30");
  }
  // Pascal triangle, built locally so the summation side does not share a
  // code path with the closed forms it is checked against.
  const int rows = bound + 2;
  std::vector<std::vector<Integer>> pascal(static_cast<std::size_t>(rows));
  for (int n = 0; n < rows; ++n) {
    auto& row = pascal[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, Integer(1));
    for (int k = 1; k < n; ++k) {
      row[static_cast<std::size_t>(k)] =
          pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
          pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
  }
  const auto local = [&](int n, int k) -> Integer {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    return pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };

  for (int d = 0; d <= bound; ++d) {
    for (int k = 0; k <= d; ++k) {
      Integer sum(0);
      for (int j = 0; j <= d - k; ++j) {
        sum += local(d - j, k);
      }
      if (sum != binomial(d + 1, k + 1)) return false;
    }
  }
  for (int v = 0; v <= bound; ++v) {
    for (int d = 0; d <= v; ++d) {
      Integer sum(0);
      for (int k = 0; k <= d; ++k) {
        sum += local(d + 1, d - k) * local(v - d, k);
      }
      if (sum != binomial(v + 1, d)) return false;
    }
  }
  return true;
}

RationalSymMatrix symmetrize_gram(
    const RationalSymMatrix& m,
    const std::function<OrbitKey(int, int)>& orbit) {
  const int n = m.dim();
  std::map<OrbitKey, std::pair<Rational, long>> classes;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto& [sum, count] = classes[orbit(i, j)];
      sum += m.at(i, j);
      count += 1;
    }
  }
  RationalSymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const auto& [sum, count] = classes.at(orbit(i, j));
      out.set(i, j, sum / Rational(count));
    }
  }
  return out;
}

std::optional<SampleWitness> sample_nonnegativity(const BoundedExponentForm& f,
                                                  int trials,
                                                  std::uint64_t seed) {
  if (trials < 1) {
    throw Error("sampling requires at least one trial");
  }
  std::mt19937_64 rng(seed);
  const GroundSet& ground = f.ground();
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(ground.size()));
    for (int i = 0; i < ground.size(); ++i) {
      values.push_back(random_rational(rng));
    }
    RationalPoint point(ground, std::move(values));
    const Rational value = evaluate(f, point);
    if (value < 0) {
      return SampleWitness{std::move(point), value};
    }
  }
  return std::nullopt;
}

bool SelfTestReport::all_pass() const {
  for (const auto& entry : entries) {
    if (!entry.pass) return false;
  }
  return true;
}

std::string SelfTestReport::to_json() const {
  nlohmann::json j;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& entry : entries) {
    nlohmann::json e;
    e["name"] = entry.name;
    e["pass"] = entry.pass;
    e["detail"] = entry.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["pass"] = all_pass();
  return j.dump(2);
}

SelfTestReport run_selftest(bool full) {
  SelfTestReport report;
  const auto add = [&report](std::string name, bool pass, std::string detail) {
    report.entries.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    const int bound = full ? 30 : 12;
    add("binomial-identities", check_binomial_identities(bound),
        "lattice-path sums up to bound " + std::to_string(bound));
  }
  {
    const int dmax = full ? 3 : 2;
    const int hmax = full ? 7 : 5;
    bool pass = true;
    int cases = 0;
    for (int d = 0; d <= dmax && pass; ++d) {
      for (int h = d; h <= hmax && pass; ++h) {
        pass = check_uniform_monomial_expansion(d, h);
        ++cases;
      }
    }
    add("uniform-monomial-expansion", pass,
        std::to_string(cases) + " (d, hsize) grid points");
  }
  {
    const int rmax = full ? 5 : 4;
    const int lmax = full ? 3 : 2;
    const int amax = full ? 7 : 5;
    bool pass = true;
    int cases = 0;
    for (int r = 3; r <= rmax && pass; ++r) {
      for (int ell = 0; ell <= lmax && pass; ++ell) {
        for (int a = r - 2; a <= amax && pass; ++a) {
          pass = check_delta_cases(LinePlusFreeSpec{r, ell, a});
          ++cases;
        }
      }
    }
    add("delta-coefficient-cases", pass,
        std::to_string(cases) + " line family instances");
  }
  {
    // orbit averaging fixes the already-symmetric Gram matrix
    const LinePlusFreeSpec spec{3, 1, 3};
    const LineGround g = line_ground(spec);
    const auto subsets = k_subsets(g.free_mask, spec.r - 1);
    const auto line_positions = subset_indices(g.line_mask);
    const auto representative = [&](int index) {
      if (index < static_cast<int>(subsets.size())) {
        return subsets[static_cast<std::size_t>(index)];
      }
      const Subset p = subset_bit(
          line_positions[static_cast<std::size_t>(
              index - static_cast<int>(subsets.size()))]);
      return p | k_subsets(g.free_mask, spec.r - 2).front();
    };
    const auto orbit = [&](int i, int j) {
      return orbit_key(representative(i), representative(j), g.free_mask,
                       g.line_mask);
    };
    const RationalSymMatrix gram = gram_matrix(spec);
    const RationalSymMatrix averaged = symmetrize_gram(gram, orbit);
    const RationalSymMatrix twice = symmetrize_gram(averaged, orbit);
    add("symmetrize-gram-fixed-point", averaged == gram && twice == averaged,
        "orbit averaging fixes the Gram matrix of line(3,1,3)");
  }
  {
    std::vector<std::string> labels = {"y1", "y2"};
    const GroundSet ground(labels);
    const BoundedExponentForm square = monomial_symmetric(
        ground, subset_bit(1), 2, 1);  // y2^2
    const bool none = !sample_nonnegativity(square, 64, 0).has_value();
    const BoundedExponentForm negative =
        monomial_symmetric(ground, ground.full_mask(), 4, 2) * Rational(-1);
    const bool found = sample_nonnegativity(negative, 64, 0).has_value();
    add("sample-nonnegativity", none && found,
        "PSD form yields no witness; negative form yields one");
  }
  return report;
}

}  // namespace rayleigh
