#include "rayleigh/families.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "rayleigh/error.hpp"

namespace rayleigh {

namespace {

std::vector<std::string> numbered_labels(const std::string& prefix, int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    labels.push_back(prefix + std::to_string(i));
  }
  return labels;
}

// Product of multiaffine polynomials with disjoint supports.
MultiaffinePoly disjoint_product(const MultiaffinePoly& p,
                                 const MultiaffinePoly& q) {
  std::map<Subset, Rational> terms;
  for (const auto& [s, cs] : p.terms()) {
    for (const auto& [t, ct] : q.terms()) {
      if ((s & t) != 0) {
        throw Error("disjoint product called on overlapping supports");
      }
      terms[s | t] += cs * ct;
    }
  }
  return MultiaffinePoly(p.ground(), std::move(terms));
}

}  // namespace

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate(const UniformSpec& spec) {
  std::vector<std::string> v;
  if (spec.r < 0) v.push_back("rank r must satisfy r >= 0");
  if (spec.m < spec.r) v.push_back("ground size m must satisfy m >= r");
  return v;
}

std::vector<std::string> validate(const TwoFlatSpec& spec) {
  std::vector<std::string> v;
  if (spec.r < 1) v.push_back("rank r must satisfy r >= 1");
  if (spec.s > spec.a) v.push_back("flat S needs s <= a");
  if (spec.t > spec.b) v.push_back("flat T needs t <= b");
  if (spec.s > spec.r) v.push_back("flat rank s must satisfy s <= r");
  if (spec.t > spec.r) v.push_back("flat rank t must satisfy t <= r");
  if (spec.s + spec.t < spec.r) v.push_back("flat ranks must satisfy s+t >= r");
  return v;
}

std::vector<std::string> validate(const LinePlusFreeSpec& spec) {
  std::vector<std::string> v;
  if (spec.r < 3) v.push_back("rank r must satisfy r >= 3");
  if (spec.ell < 0) v.push_back("extra line points must satisfy ell >= 0");
  if (spec.a < spec.r - 2) v.push_back("free points must satisfy a >= r-2");
  return v;
}

std::vector<std::string> validate(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return validate(s); }, spec);
}

void require_valid(const FamilySpec& spec) {
  const auto violations = validate(spec);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid " << family_name(spec) << ":";
  for (const auto& v : violations) {
    msg << " " << v << ";";
  }
  throw Error(msg.str());
}

// ---------------------------------------------------------------------------
// Ground sets

GroundSet uniform_ground(const UniformSpec& spec) {
  return GroundSet(numbered_labels("x", spec.m));
}

TwoFlatGround two_flat_ground(const TwoFlatSpec& spec) {
  std::vector<std::string> labels = numbered_labels("s", spec.a);
  const auto t_labels = numbered_labels("t", spec.b);
  labels.insert(labels.end(), t_labels.begin(), t_labels.end());
  TwoFlatGround g{GroundSet(std::move(labels)), 0, 0};
  for (int i = 0; i < spec.a; ++i) g.s_mask |= subset_bit(i);
  for (int i = spec.a; i < spec.a + spec.b; ++i) g.t_mask |= subset_bit(i);
  return g;
}

LineGround line_ground(const LinePlusFreeSpec& spec) {
  std::vector<std::string> labels = numbered_labels("a", spec.a);
  const auto line_labels = numbered_labels("p", spec.ell);
  labels.insert(labels.end(), line_labels.begin(), line_labels.end());
  LineGround g;
  g.reduced = GroundSet(labels);
  labels.push_back("e");
  labels.push_back("f");
  g.full = GroundSet(std::move(labels));
  for (int i = 0; i < spec.a; ++i) g.free_mask |= subset_bit(i);
  for (int i = spec.a; i < spec.a + spec.ell; ++i) g.line_mask |= subset_bit(i);
  return g;
}

// ---------------------------------------------------------------------------
// Basis enumerators

MultiaffinePoly basis_enumerator(const UniformSpec& spec) {
  require_valid(spec);
  const GroundSet ground = uniform_ground(spec);
  const Subset all = ground.full_mask();
  return elementary_symmetric(ground, all, spec.r);
}

MultiaffinePoly basis_enumerator(const TwoFlatSpec& spec) {
  require_valid(spec);
  const TwoFlatGround g = two_flat_ground(spec);
  MultiaffinePoly total = MultiaffinePoly::zero(g.ground);
  // i ranges over r-t..s; both binomials are nonzero throughout since
  // s <= a and r-i <= t <= b.
  for (int i = spec.r - spec.t; i <= spec.s; ++i) {
    total = total + disjoint_product(
                        elementary_symmetric(g.ground, g.s_mask, i),
                        elementary_symmetric(g.ground, g.t_mask, spec.r - i));
  }
  return total;
}

MultiaffinePoly basis_enumerator(const LinePlusFreeSpec& spec) {
  require_valid(spec);
  const LineGround g = line_ground(spec);
  const GroundSet& ground = g.full;
  Subset free_mask = 0;
  Subset line_ef_mask = 0;
  for (int i = 0; i < spec.a; ++i) free_mask |= subset_bit(i);
  for (int i = spec.a; i < ground.size(); ++i) line_ef_mask |= subset_bit(i);

  MultiaffinePoly total = elementary_symmetric(ground, free_mask, spec.r);
  total = total + disjoint_product(
                      elementary_symmetric(ground, line_ef_mask, 1),
                      elementary_symmetric(ground, free_mask, spec.r - 1));
  total = total + disjoint_product(
                      elementary_symmetric(ground, line_ef_mask, 2),
                      elementary_symmetric(ground, free_mask, spec.r - 2));
  return total;
}

// ---------------------------------------------------------------------------
// Closed-form Rayleigh difference for the line family

BoundedExponentForm rayleigh_closed_form(const LinePlusFreeSpec& spec) {
  require_valid(spec);
  const LineGround g = line_ground(spec);
  const GroundSet& ground = g.reduced;
  const int d = spec.r - 1;

  BoundedExponentForm free_part = BoundedExponentForm::zero(ground);
  for (int k = 0; k <= d; ++k) {
    const Rational coeff = make_rational(binomial(2 * k, k), Integer(k + 1));
    free_part = free_part +
                monomial_symmetric(ground, g.free_mask, 2 * d, d - k) * coeff;
  }

  BoundedExponentForm one_line_var = BoundedExponentForm::zero(ground);
  for (int k = 1; k <= d; ++k) {
    const Rational coeff(binomial(2 * k - 1, k));
    one_line_var =
        one_line_var +
        monomial_symmetric(ground, g.free_mask, 2 * d - 1, d - k) * coeff;
  }

  BoundedExponentForm two_line_vars = BoundedExponentForm::zero(ground);
  for (int k = 0; k <= d - 1; ++k) {
    const Rational coeff(binomial(2 * k, k));
    two_line_vars =
        two_line_vars +
        monomial_symmetric(ground, g.free_mask, 2 * d - 2, d - 1 - k) * coeff;
  }

  const BoundedExponentForm m1_line =
      monomial_symmetric(ground, g.line_mask, 1, 0);
  const BoundedExponentForm m2_line =
      monomial_symmetric(ground, g.line_mask, 2, 1);
  const BoundedExponentForm m11_line =
      monomial_symmetric(ground, g.line_mask, 2, 0);

  return free_part + m1_line * one_line_var +
         (m2_line + m11_line) * two_line_vars;
}

PartitionedGroundSet line_partition(const LinePlusFreeSpec& spec) {
  const LineGround g = line_ground(spec);
  std::vector<std::pair<std::string, Subset>> blocks;
  if (g.free_mask != 0) blocks.emplace_back("A", g.free_mask);
  if (g.line_mask != 0) blocks.emplace_back("L", g.line_mask);
  return PartitionedGroundSet(g.reduced, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Serialization

std::string family_to_json(const FamilySpec& spec) {
  nlohmann::json j;
  if (const auto* u = std::get_if<UniformSpec>(&spec)) {
    j["family"] = "uniform";
    j["r"] = u->r;
    j["m"] = u->m;
  } else if (const auto* tf = std::get_if<TwoFlatSpec>(&spec)) {
    j["family"] = "twoflats";
    j["r"] = tf->r;
    j["s"] = tf->s;
    j["t"] = tf->t;
    j["a"] = tf->a;
    j["b"] = tf->b;
  } else {
    const auto& l = std::get<LinePlusFreeSpec>(spec);
    j["family"] = "line";
    j["r"] = l.r;
    j["ell"] = l.ell;
    j["a"] = l.a;
  }
  return j.dump();
}

FamilySpec family_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed family JSON: ") + e.what());
  }
  try {
    const std::string family = j.at("family").get<std::string>();
    if (family == "uniform") {
      return UniformSpec{j.at("r").get<int>(), j.at("m").get<int>()};
    }
    if (family == "twoflats") {
      return TwoFlatSpec{j.at("r").get<int>(), j.at("s").get<int>(),
                         j.at("t").get<int>(), j.at("a").get<int>(),
                         j.at("b").get<int>()};
    }
    if (family == "line") {
      return LinePlusFreeSpec{j.at("r").get<int>(), j.at("ell").get<int>(),
                              j.at("a").get<int>()};
    }
    throw Error("unknown family '" + family + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed family JSON: ") + e.what());
  }
}

std::string family_name(const FamilySpec& spec) {
  std::ostringstream out;
  if (const auto* u = std::get_if<UniformSpec>(&spec)) {
    out << "uniform(r=" << u->r << ", m=" << u->m << ")";
  } else if (const auto* tf = std::get_if<TwoFlatSpec>(&spec)) {
    out << "twoflats(r=" << tf->r << ", s=" << tf->s << ", t=" << tf->t
        << ", a=" << tf->a << ", b=" << tf->b << ")";
  } else {
    const auto& l = std::get<LinePlusFreeSpec>(spec);
    out << "line(r=" << l.r << ", ell=" << l.ell << ", a=" << l.a << ")";
  }
  return out.str();
}

}  // namespace rayleigh
