#include "dtrip/core/integer.hpp"

#include <cctype>

#include "dtrip/errors.hpp"

namespace dtrip {

Integer parse_integer(const std::string& token) {
  std::size_t start = 0;
  std::size_t end = token.size();
  while (start < end && std::isspace(static_cast<unsigned char>(token[start]))) ++start;
  while (end > start && std::isspace(static_cast<unsigned char>(token[end - 1]))) --end;
  std::string t = token.substr(start, end - start);
  std::size_t i = (!t.empty() && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
  if (i == t.size()) throw DomainError("not an integer: '" + token + "'");
  for (std::size_t j = i; j < t.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(t[j]))) {
      throw DomainError("not an integer: '" + token + "'");
    }
  }
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t, 10);
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    out.push_back(parse_integer(text.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
  Integer num = abs(q.get_num()) * scale;
  Integer scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (sgn(q) < 0) s.insert(0, "-");
  return s;
}

Rational round_up_dyadic(const Rational& q, unsigned long bits) {
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  Rational r(c, Integer(1));
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

Rational round_down_dyadic(const Rational& q, unsigned long bits) {
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  Rational r(f, Integer(1));
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

Rational sqrt_upper(const Rational& q, unsigned long bits) {
  if (sgn(q) <= 0) return Rational(0);
  // sqrt(q) <= (isqrt(ceil(q * 4^bits)) + 1) / 2^bits
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * bits);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  Integer r = isqrt(c) + 1;
  Rational out(r, Integer(1));
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

Rational sqrt_lower(const Rational& q, unsigned long bits) {
  if (sgn(q) <= 0) return Rational(0);
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * bits);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  Rational out(isqrt(f), Integer(1));
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

}  // namespace dtrip
