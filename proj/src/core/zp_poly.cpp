#include "zp_poly.hpp"

#include <algorithm>

namespace dtrip::zp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

u64 inv_mod(u64 a, u64 p) {
  // Fermat; p is prime
  u64 result = 1;
  u64 base = a % p;
  u64 e = p - 2;
  while (e) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 s, u64 p) {
  Poly r(a);
  for (auto& v : r) v = v * s % p;
  trim(r);
  return r;
}

void divrem(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
  r = a;
  if (degree(a) < degree(b)) {
    q.clear();
    return;
  }
  const int db = degree(b);
  const u64 inv = inv_mod(b.back(), p);
  q.assign(static_cast<std::size_t>(degree(a) - db + 1), 0);
  for (int i = degree(a) - db; i >= 0; --i) {
    u64 t = r[static_cast<std::size_t>(i + db)] * inv % p;
    q[static_cast<std::size_t>(i)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i + j)];
      slot = (slot + p - t * b[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  trim(q);
  trim(r);
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  Poly q;
  Poly r;
  divrem(a, b, p, q, r);
  return r;
}

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly xgcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t) {
  Poly r0 = a;
  Poly r1 = b;
  Poly s0{1};
  Poly s1;
  Poly t0;
  Poly t1{1};
  while (!r1.empty()) {
    Poly q;
    Poly r;
    divrem(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = inv_mod(r0.back(), p);
  s = scale(s0, inv, p);
  t = scale(t0, inv, p);
  return scale(r0, inv, p);
}

Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& mod, u64 p) {
  Poly result{1};
  result = rem(result, mod, p);
  Poly b = rem(base, mod, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), mod, p);
  }
  return result;
}

Poly from_int(const IntPoly& f, u64 p) {
  Poly r(f.coeffs().size());
  Integer m(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Integer v;
    mpz_fdiv_r(v.get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
    r[i] = v.get_ui();
  }
  trim(r);
  return r;
}

IntPoly to_int(const Poly& f) {
  std::vector<Integer> c;
  c.reserve(f.size());
  for (u64 v : f) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f_in, u64 p) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = f_in;
  const Poly x{0, 1};
  Poly h = rem(x, f, p);
  const Integer pz(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, pz, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      Poly q;
      Poly r;
      divrem(f, g, p, q, r);
      f = q;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, int d, u64 p, std::mt19937_64& rng) {
  if (degree(f) == d) return {f};
  const int n = degree(f);
  Integer e = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& v : a) v = coef(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(f, a, p);
    if (degree(g) > 0 && degree(g) < n) {
      Poly q;
      Poly r;
      divrem(f, g, p, q, r);
      auto left = equal_degree(g, d, p, rng);
      auto right = equal_degree(monic(q, p), d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    Poly b = powmod(a, e, f, p);
    b = sub(b, Poly{1}, p);
    g = gcd(f, b, p);
    if (degree(g) > 0 && degree(g) < n) {
      Poly q;
      Poly r;
      divrem(f, g, p, q, r);
      auto left = equal_degree(g, d, p, rng);
      auto right = equal_degree(monic(q, p), d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& [g, d] : distinct_degree(f, p)) {
    auto parts = equal_degree(g, d, p, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace dtrip::zp
