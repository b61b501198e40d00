#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace dtrip {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Exact square root of a nonnegative perfect square, nullopt otherwise.
inline std::optional<Integer> exact_sqrt(const Integer& n) {
  if (!is_perfect_square(n)) return std::nullopt;
  return isqrt(n);
}

// Rationals in lowest terms are squares iff numerator and denominator are.
inline bool is_rational_square(const Rational& q) {
  return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rpow(const Rational& base, unsigned long e) {
  Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  r.canonicalize();
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses a decimal integer with optional sign; throws DomainError naming the token.
Integer parse_integer(const std::string& token);

// Comma-separated list of decimal integers ("0,0,1", "-1,-1,0,1").
std::vector<Integer> parse_integer_list(const std::string& text);

// Fixed-point decimal rendering with `digits` digits after the point,
// truncated toward zero.
std::string to_decimal(const Rational& q, int digits);

// Smallest dyadic q' >= q (resp. largest <= q) with denominator 2^bits.
Rational round_up_dyadic(const Rational& q, unsigned long bits);
Rational round_down_dyadic(const Rational& q, unsigned long bits);

// Rational upper bound on sqrt(q) for q >= 0, accurate to about 2^-bits.
Rational sqrt_upper(const Rational& q, unsigned long bits);
Rational sqrt_lower(const Rational& q, unsigned long bits);

}  // namespace dtrip
