#include "fwps/arith.hpp"

#include "fwps/error.hpp"

namespace fwps {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer gcd(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::kInvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_pair_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::kParse, "malformed rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::optional<std::int64_t> to_int64(const Integer& value) {
  if (!mpz_fits_slong_p(value.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(mpz_get_si(value.get_mpz_t()));
}

}  // namespace fwps
