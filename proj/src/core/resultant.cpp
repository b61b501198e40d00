#include "dtrip/core/resultant.hpp"

#include <utility>

namespace dtrip {

namespace {

Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntPoly divide_coeffs(const IntPoly& p, const Integer& d) {
  std::vector<Integer> c(p.coeffs());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(c));
}

}  // namespace

// Subresultant algorithm in the formulation of Cohen, "A Course in
// Computational Algebraic Number Theory", Alg. 3.3.7.
Integer resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of the zero polynomial");
  if (p.degree() == 0) return ipow(p.lead(), static_cast<unsigned long>(q.degree()));
  if (q.degree() == 0) return ipow(q.lead(), static_cast<unsigned long>(p.degree()));

  IntPoly a = p;
  IntPoly b = q;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
  }
  Integer ca = content(a);
  Integer cb = content(b);
  a = divide_coeffs(a, ca);
  b = divide_coeffs(b, cb);
  Integer g(1);
  Integer h(1);
  Integer t = ipow(ca, static_cast<unsigned long>(b.degree())) *
              ipow(cb, static_cast<unsigned long>(a.degree()));

  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) return Integer(0);
    b = divide_coeffs(r, g * ipow(h, static_cast<unsigned long>(delta)));
    g = a.lead();
    // h <- h^(1 - delta) * g^delta
    if (delta > 0) {
      h = exact_quotient(ipow(g, static_cast<unsigned long>(delta)),
                         ipow(h, static_cast<unsigned long>(delta - 1)));
    }
    if (b.degree() == 0) break;
  }
  // h <- h^(1 - deg a) * lc(b)^deg a
  const auto da = static_cast<unsigned long>(a.degree());
  Integer hh = exact_quotient(ipow(b.lead(), da), ipow(h, da - 1));
  return s * t * hh;
}

Rational resultant(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of the zero polynomial");
  Rational sp;
  Rational sq;
  IntPoly ip = primitive_integer(p, &sp);
  IntPoly iq = primitive_integer(q, &sq);
  Rational r(resultant(ip, iq));
  r *= rpow(sp, static_cast<unsigned long>(q.degree()));
  r *= rpow(sq, static_cast<unsigned long>(p.degree()));
  return r;
}

Rational discriminant(const RatPoly& p) {
  const int n = p.degree();
  if (n < 1) throw DomainError("discriminant of a constant");
  Rational r = resultant(p, p.derivative());
  Rational d = r / p.lead();
  if ((n * (n - 1) / 2) & 1) d = -d;
  return d;
}

// Subresultant gcd (Cohen Alg. 3.3.1).
IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero()) return primitive_part(b_in);
  if (b_in.is_zero()) return primitive_part(a_in);
  IntPoly a = a_in;
  IntPoly b = b_in;
  if (a.degree() < b.degree()) std::swap(a, b);
  a = primitive_part(a);
  b = primitive_part(b);
  Integer g(1);
  Integer h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = IntPoly::constant(Integer(1));
      break;
    }
    a = b;
    b = divide_coeffs(r, g * ipow(h, static_cast<unsigned long>(delta)));
    g = a.lead();
    if (delta > 0) {
      h = exact_quotient(ipow(g, static_cast<unsigned long>(delta)),
                         ipow(h, static_cast<unsigned long>(delta - 1)));
    }
  }
  return primitive_part(b);
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) return RatPoly();
  IntPoly g = gcd(primitive_integer(a), primitive_integer(b));
  return make_monic(to_rat(g));
}

bool is_squarefree(const IntPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

bool is_squarefree(const RatPoly& p) { return is_squarefree(primitive_integer(p)); }

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return make_monic(p);
  RatPoly g = gcd(p, p.derivative());
  return make_monic(divrem(p, g).first);
}

RatPoly xgcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t) {
  RatPoly r0 = a;
  RatPoly r1 = b;
  RatPoly s0 = RatPoly::constant(Rational(1));
  RatPoly s1;
  RatPoly t0;
  RatPoly t1 = RatPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = RatPoly();
    t = RatPoly();
    return r0;
  }
  Rational inv = 1 / r0.lead();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

}  // namespace dtrip
