#include "dtrip/core/poly.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace dtrip {

RatPoly to_rat(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

Integer content(const IntPoly& p) {
  Integer g(0);
  for (const auto& v : p.coeffs()) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (sgn(p.lead()) < 0) g = -g;
  std::vector<Integer> c(p.coeffs());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly primitive_integer(const RatPoly& p, Rational* scale) {
  if (p.is_zero()) {
    if (scale) *scale = 0;
    return IntPoly();
  }
  Integer den(1);
  for (const auto& v : p.coeffs()) den = lcm(den, v.get_den());
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.get_num() * (den / v.get_den()));
  IntPoly ip(std::move(c));
  IntPoly pp = primitive_part(ip);
  if (scale) {
    // p = ip / den, ip = (lead(ip)/lead(pp)) * pp
    Rational r(ip.lead(), pp.lead());
    r.canonicalize();
    *scale = r / Rational(den);
  }
  return pp;
}

IntPoly to_int_exact(const RatPoly& p) {
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    if (v.get_den() != 1) throw DomainError("non-integral coefficient " + v.get_str());
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> r(a.coeffs());
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
  const Rational inv_lead = 1 / b.lead();
  for (int i = dq; i >= 0; --i) {
    Rational t = r[static_cast<std::size_t>(i + db)] * inv_lead;
    q[static_cast<std::size_t>(i)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(i + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coeffs());
  const int db = b.degree();
  const Integer& lb = b.lead();
  for (int top = a.degree(); top >= db; --top) {
    Integer t = r[static_cast<std::size_t>(top)];
    for (auto& v : r) v *= lb;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(top - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return IntPoly(std::move(r));
}

bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) {
    if (quotient) *quotient = IntPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Integer> r(a.coeffs());
  const int db = b.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int i = a.degree() - db; i >= 0; --i) {
    const Integer& top = r[static_cast<std::size_t>(i + db)];
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t())) return false;
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(i + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    q[static_cast<std::size_t>(i)] = std::move(t);
  }
  for (int j = 0; j < db; ++j) {
    if (r[static_cast<std::size_t>(j)] != 0) return false;
  }
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!divides(b, a, &q)) throw InternalError("inexact polynomial division");
  return q;
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.lead());
}

namespace {

template <typename T>
std::string print_poly(const Poly<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p.coeff(i);
    if (c == 0) continue;
    bool neg = sgn(c) < 0;
    T mag = neg ? T(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return print_poly(p, var); }
std::string to_string(const RatPoly& p, const std::string& var) { return print_poly(p, var); }

IntPoly parse_int_poly(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw DomainError("empty polynomial");
  std::map<int, Integer> terms;
  std::size_t i = 0;
  auto fail = [&](std::size_t at) {
    std::size_t end = at;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string tok = s.substr(at, std::max<std::size_t>(end - at, 1));
    throw DomainError("unparseable polynomial token '" + tok + "' in '" + text + "'");
  };
  while (i < s.size()) {
    std::size_t term_start = i;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail(i);
    }
    if (i >= s.size()) fail(term_start);
    Integer coef(1);
    bool have_coef = false;
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > digits_start) {
      coef = Integer(s.substr(digits_start, i - digits_start), 10);
      have_coef = true;
    }
    int exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) fail(term_start);
      ++i;
      if (i >= s.size() || (s[i] != 'x' && s[i] != 'X')) fail(term_start);
    }
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t e_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == e_start || i - e_start > 6) fail(term_start);
        exponent = std::stoi(s.substr(e_start, i - e_start));
      }
    } else if (!have_coef) {
      fail(term_start);
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') fail(term_start);
    terms[exponent] += sign * coef;
  }
  int deg = terms.rbegin()->first;
  std::vector<Integer> c(static_cast<std::size_t>(deg) + 1, Integer(0));
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e)] = v;
  return IntPoly(std::move(c));
}

IntPoly parse_coeff_list(const std::string& text) {
  return IntPoly(parse_integer_list(text));
}

}  // namespace dtrip
