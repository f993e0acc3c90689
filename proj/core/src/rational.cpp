#include "rayleigh/rational.hpp"

#include <cctype>

#include "rayleigh/error.hpp"

namespace rayleigh {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) {
    return Integer(0);
  }
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) throw Error("malformed rational: '" + text + "'");
      return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) {
      throw Error("malformed rational: '" + text + "'");
    }
    return make_rational(Integer(num), Integer(den));
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational: '" + text + "'");
  }
}

std::string fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string decimal_string(const Rational& value, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(|v|*scale + 1/2), then reattach the sign
  Rational magnitude = abs(value) * Rational(scale);
  Integer units = rational_floor(magnitude + make_rational(1, 2));
  const bool negative = sgn(value) < 0 && units != 0;

  Integer whole = units / scale;
  Integer frac = units % scale;
  std::string frac_str = frac.get_str();
  frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    out += "." + frac_str;
  }
  return out;
}

Integer rational_floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
             value.get_den().get_mpz_t());
  return q;
}

}  // namespace rayleigh
