#include "rayleigh/certificates.hpp"

#include <nlohmann/json.hpp>

#include "rayleigh/error.hpp"
#include "rayleigh/johnson.hpp"
#include "rayleigh/matrix.hpp"

namespace rayleigh {

namespace {

constexpr long kMaxSubsetBlock = 20000;

struct GramLayout {
  LineGround ground;
  std::vector<Subset> free_subsets;  // d-subsets of A on the reduced ground
  std::vector<int> line_positions;   // ground indices of the line points
  int d = 0;
};

GramLayout gram_layout(const LinePlusFreeSpec& spec) {
  require_valid(FamilySpec(spec));
  GramLayout layout;
  layout.ground = line_ground(spec);
  layout.d = spec.r - 1;
  if (binomial(spec.a, layout.d) > kMaxSubsetBlock) {
    throw SizeError("subset block C(" + std::to_string(spec.a) + "," +
                    std::to_string(layout.d) + ") exceeds " +
                    std::to_string(kMaxSubsetBlock));
  }
  layout.free_subsets = k_subsets(layout.ground.free_mask, layout.d);
  layout.line_positions = subset_indices(layout.ground.line_mask);
  return layout;
}

}  // namespace

OrbitKey orbit_key(Subset s, Subset t, Subset free_mask, Subset line_mask) {
  return OrbitKey{subset_size(s & line_mask), subset_size(t & line_mask),
                  subset_size(s & t & line_mask),
                  subset_size(s & t & free_mask)};
}

RationalSymMatrix gram_matrix(const LinePlusFreeSpec& spec) {
  const GramLayout layout = gram_layout(spec);
  const int t = static_cast<int>(layout.free_subsets.size());
  const int n = t + spec.ell;
  RationalSymMatrix out(n);
  for (int i = 0; i < t; ++i) {
    for (int j = i; j < t; ++j) {
      const int k =
          layout.d -
          subset_size(layout.free_subsets[static_cast<std::size_t>(i)] &
                      layout.free_subsets[static_cast<std::size_t>(j)]);
      out.set(i, j, make_rational(1, k + 1));
    }
  }
  for (int i = 0; i < t; ++i) {
    for (int p = t; p < n; ++p) {
      out.set(i, p, make_rational(1, 2));
    }
  }
  for (int p = t; p < n; ++p) {
    for (int q = p; q < n; ++q) {
      out.set(p, q, p == q ? Rational(1) : make_rational(1, 2));
    }
  }
  return out;
}

RationalSymMatrix schur_complement(const LinePlusFreeSpec& spec) {
  if (spec.ell == 0) {
    throw Error("no line block");
  }
  const GramLayout layout = gram_layout(spec);
  const int t = static_cast<int>(layout.free_subsets.size());
  const Rational shift = make_rational(spec.ell, 2 * spec.ell + 2);
  RationalSymMatrix out(t);
  for (int i = 0; i < t; ++i) {
    for (int j = i; j < t; ++j) {
      const int k =
          layout.d -
          subset_size(layout.free_subsets[static_cast<std::size_t>(i)] &
                      layout.free_subsets[static_cast<std::size_t>(j)]);
      out.set(i, j, make_rational(1, k + 1) - shift);
    }
  }
  return out;
}

bool psd_closed_form(const LinePlusFreeSpec& spec) {
  require_valid(FamilySpec(spec));
  const int d = spec.r - 1;
  const Rational lhs =
      make_rational(binomial(spec.a + 1, d), Integer(d + 1));
  const Rational rhs = make_rational(spec.ell, 2 * spec.ell + 2) *
                       Rational(binomial(spec.a, d));
  return lhs >= rhs;
}

SOSCertificate build_certificate(const LinePlusFreeSpec& spec) {
  if (!psd_closed_form(spec)) {
    throw Error("no SOS certificate exists: free points exceed the threshold");
  }
  const GramLayout layout = gram_layout(spec);
  const int t = static_cast<int>(layout.free_subsets.size());
  const RationalSymMatrix gram = gram_matrix(spec);
  const auto [psd, fact] = ldl_psd_check(gram);
  if (!psd) {
    throw Error("internal error: Gram matrix fails the PSD factorization");
  }

  // basis vector behind Gram index b: a single d-subset of A, or, for a
  // line point p, every d-subset meeting the line exactly in p
  const auto basis_monomials = [&](int b) {
    std::vector<Subset> monomials;
    if (b < t) {
      monomials.push_back(layout.free_subsets[static_cast<std::size_t>(b)]);
    } else {
      const Subset p = subset_bit(layout.line_positions[
          static_cast<std::size_t>(b - t)]);
      for (Subset rest : k_subsets(layout.ground.free_mask, layout.d - 1)) {
        monomials.push_back(p | rest);
      }
    }
    return monomials;
  };

  SOSCertificate cert;
  cert.ground = layout.ground.reduced;
  cert.basis_degree = layout.d;
  cert.family = spec;
  const int n = static_cast<int>(fact.perm.size());
  for (int k = 0; k < n; ++k) {
    CertificateSummand summand;
    summand.weight = fact.diag[static_cast<std::size_t>(k)];
    for (int r = k; r < n; ++r) {
      const Rational& coeff =
          fact.unit_lower[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
      if (coeff == 0) continue;
      for (Subset s : basis_monomials(fact.perm[static_cast<std::size_t>(r)])) {
        summand.form[s] += coeff;
      }
    }
    for (auto it = summand.form.begin(); it != summand.form.end();) {
      it = (it->second == 0) ? summand.form.erase(it) : std::next(it);
    }
    cert.summands.push_back(std::move(summand));
  }
  return cert;
}

SOSCertificate uniform_sos(int d, const GroundSet& h) {
  if (d < 0 || d > h.size()) {
    throw Error("uniform certificate requires 0 <= d <= |H|");
  }
  SOSCertificate cert;
  cert.ground = h;
  cert.basis_degree = d;
  const Subset all = h.full_mask();
  for (int j = 0; j <= d; ++j) {
    const Rational weight =
        make_rational(Integer(1), Integer(d + 1) * binomial(d, j));
    for (Subset chosen : k_subsets(all, j)) {
      CertificateSummand summand;
      summand.weight = weight;
      for (Subset rest : k_subsets(all & ~chosen, d - j)) {
        summand.form.emplace(chosen | rest, Rational(1));
      }
      cert.summands.push_back(std::move(summand));
    }
  }
  return cert;
}

BoundedExponentForm certificate_expansion(const SOSCertificate& cert) {
  std::map<Exponents, Rational> total;
  for (const auto& summand : cert.summands) {
    if (summand.weight == 0) continue;
    for (auto it = summand.form.begin(); it != summand.form.end(); ++it) {
      for (auto jt = it; jt != summand.form.end(); ++jt) {
        const Subset s = it->first;
        const Subset u = jt->first;
        Rational contribution = summand.weight * it->second * jt->second;
        if (it != jt) contribution *= 2;
        total[Exponents{.ones = s ^ u, .twos = s & u}] += contribution;
      }
    }
  }
  return BoundedExponentForm(cert.ground, std::move(total));
}

bool verify_certificate(const SOSCertificate& cert,
                        const BoundedExponentForm& target) {
  if (!(cert.ground == target.ground())) {
    throw Error("certificate and target have different ground sets");
  }
  return certificate_expansion(cert) == target;
}

std::string certificate_to_json(const SOSCertificate& cert) {
  if (!cert.family) {
    throw Error("only line-family certificates are serializable");
  }
  nlohmann::json j;
  j["family"] = nlohmann::json::parse(family_to_json(FamilySpec(*cert.family)));
  j["pair"] = {"e", "f"};
  j["basis_degree"] = cert.basis_degree;
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& summand : cert.summands) {
    nlohmann::json entry;
    entry["weight"] = fraction_string(summand.weight);
    nlohmann::json form = nlohmann::json::array();
    for (const auto& [subset, coeff] : summand.form) {
      nlohmann::json term;
      term["subset"] = cert.ground.labels_of(subset);
      term["coeff"] = fraction_string(coeff);
      form.push_back(std::move(term));
    }
    entry["form"] = std::move(form);
    summands.push_back(std::move(entry));
  }
  j["summands"] = std::move(summands);
  return j.dump(2);
}

SOSCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate JSON: ") + e.what());
  }
  try {
    const FamilySpec family = family_from_json(j.at("family").dump());
    const auto* line = std::get_if<LinePlusFreeSpec>(&family);
    if (line == nullptr) {
      throw Error("certificate family must be the line family");
    }
    require_valid(family);
    SOSCertificate cert;
    cert.family = *line;
    cert.ground = line_ground(*line).reduced;
    cert.basis_degree = j.at("basis_degree").get<int>();
    if (cert.basis_degree != line->r - 1) {
      throw Error("certificate basis degree does not match the family rank");
    }
    for (const auto& entry : j.at("summands")) {
      CertificateSummand summand;
      summand.weight = parse_rational(entry.at("weight").get<std::string>());
      if (summand.weight < 0) {
        throw Error("certificate weight is negative");
      }
      for (const auto& term : entry.at("form")) {
        const Subset s =
            cert.ground.mask_of(term.at("subset").get<std::vector<std::string>>());
        if (subset_size(s) != cert.basis_degree) {
          throw Error("certificate form subset has the wrong size");
        }
        const Rational coeff =
            parse_rational(term.at("coeff").get<std::string>());
        if (!summand.form.emplace(s, coeff).second) {
          throw Error("certificate form repeats a subset");
        }
      }
      cert.summands.push_back(std::move(summand));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate JSON: ") + e.what());
  }
}

}  // namespace rayleigh
