#include "dtrip/core/factor.hpp"

#include <algorithm>
#include <random>

#include "dtrip/core/resultant.hpp"
#include "zp_poly.hpp"

namespace dtrip {

IntPoly Factorization::expand() const {
  IntPoly out = IntPoly::constant(unit);
  for (const auto& [f, e] : factors) out = out * pow(f, static_cast<unsigned>(e));
  return out;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() <= 0) return out;
  RatPoly f = to_rat(primitive_part(p));
  RatPoly df = f.derivative();
  RatPoly g = gcd(f, df);
  RatPoly c = divrem(f, g).first;
  RatPoly d = divrem(df, g).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    RatPoly a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(primitive_integer(a), i);
    c = divrem(c, a).first;
    d = divrem(d, a).first - c.derivative();
    ++i;
  }
  return out;
}

namespace {

using zp::u64;

Integer mod_nonneg(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

IntPoly mod_coeffs(const IntPoly& a, const Integer& m) {
  std::vector<Integer> c(a.coeffs());
  for (auto& v : c) v = mod_nonneg(v, m);
  return IntPoly(std::move(c));
}

IntPoly symmetric_coeffs(const IntPoly& a, const Integer& m) {
  Integer half = m / 2;
  std::vector<Integer> c(a.coeffs());
  for (auto& v : c) {
    v = mod_nonneg(v, m);
    if (v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

// a = q*h + r (mod m) for monic h.
void divrem_monic(const IntPoly& a, const IntPoly& h, const Integer& m, IntPoly& q, IntPoly& r) {
  std::vector<Integer> rc = mod_coeffs(a, m).coeffs();
  const int dh = h.degree();
  const int da = static_cast<int>(rc.size()) - 1;
  if (da < dh) {
    q = IntPoly();
    r = IntPoly(std::move(rc));
    return;
  }
  std::vector<Integer> qc(static_cast<std::size_t>(da - dh + 1));
  for (int i = da - dh; i >= 0; --i) {
    Integer t = mod_nonneg(rc[static_cast<std::size_t>(i + dh)], m);
    qc[static_cast<std::size_t>(i)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= dh; ++j) {
      rc[static_cast<std::size_t>(i + j)] -= t * h.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rc.resize(static_cast<std::size_t>(dh));
  q = mod_coeffs(IntPoly(std::move(qc)), m);
  r = mod_coeffs(IntPoly(std::move(rc)), m);
}

// One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10): from
// f = g*h, s*g + t*h = 1 mod m to the same relations mod m2 (m2 | m^2).
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t,
                 const Integer& m2) {
  IntPoly e = mod_coeffs(f - g * h, m2);
  IntPoly q;
  IntPoly r;
  divrem_monic(s * e, h, m2, q, r);
  IntPoly g_new = mod_coeffs(g + t * e + q * g, m2);
  IntPoly h_new = mod_coeffs(h + r, m2);

  IntPoly b = mod_coeffs(s * g_new + t * h_new - IntPoly::constant(Integer(1)), m2);
  IntPoly c;
  IntPoly d;
  divrem_monic(s * b, h_new, m2, c, d);
  IntPoly s_new = mod_coeffs(s - d, m2);
  IntPoly t_new = mod_coeffs(t - t * b - c * g_new, m2);
  g = std::move(g_new);
  h = std::move(h_new);
  s = std::move(s_new);
  t = std::move(t_new);
}

// Lifts f = lc(f) * prod(us) mod p to monic factors mod p^(2^steps).
std::vector<IntPoly> multi_lift(const IntPoly& f, const std::vector<zp::Poly>& us, u64 p,
                                int steps) {
  const Integer pz(static_cast<unsigned long>(p));
  Integer target = pz;
  for (int i = 0; i < steps; ++i) target *= target;
  if (us.size() == 1) {
    Integer lc_inv;
    Integer lc = mod_nonneg(f.lead(), target);
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
    return {mod_coeffs(f * lc_inv, target)};
  }
  const std::size_t half = us.size() / 2;
  std::vector<zp::Poly> left(us.begin(), us.begin() + static_cast<long>(half));
  std::vector<zp::Poly> right(us.begin() + static_cast<long>(half), us.end());
  zp::Poly g0{mod_nonneg(f.lead(), pz).get_ui()};
  for (const auto& u : left) g0 = zp::mul(g0, u, p);
  zp::Poly h0{1};
  for (const auto& u : right) h0 = zp::mul(h0, u, p);
  zp::Poly s0;
  zp::Poly t0;
  zp::xgcd(g0, h0, p, s0, t0);

  IntPoly g = zp::to_int(g0);
  IntPoly h = zp::to_int(h0);
  IntPoly s = zp::to_int(s0);
  IntPoly t = zp::to_int(t0);
  Integer m = pz;
  for (int i = 0; i < steps; ++i) {
    m *= m;
    hensel_step(mod_coeffs(f, m), g, h, s, t, m);
  }
  auto lg = multi_lift(g, left, p, steps);
  auto lh = multi_lift(h, right, p, steps);
  lg.insert(lg.end(), lh.begin(), lh.end());
  return lg;
}

bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Coefficient bound for any factor of f scaled by lc(f) (Mignotte).
Integer factor_coefficient_bound(const IntPoly& f) {
  Integer norm2(0);
  for (const auto& v : f.coeffs()) norm2 += v * v;
  Integer b = isqrt(norm2) + 1;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  return b * abs(f.lead());
}

std::vector<IntPoly> factor_squarefree_primitive(IntPoly f) {
  std::vector<IntPoly> out;
  if (f.coeff(0) == 0) {
    out.push_back(IntPoly{0, 1});
    f = exact_div(f, IntPoly{0, 1});
  }
  if (f.degree() <= 0) return out;
  if (f.degree() == 1) {
    out.push_back(primitive_part(f));
    return out;
  }

  // Several admissible primes; keep the one with the fewest modular factors.
  std::mt19937_64 rng(0x5eed1234abcdULL);
  u64 best_p = 0;
  std::size_t best_count = 0;
  int admissible = 0;
  for (u64 p = 3; admissible < 7; p += 2) {
    if (!is_small_prime(p)) continue;
    if (mpz_divisible_ui_p(f.lead().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    zp::Poly fp = zp::monic(zp::from_int(f, p), p);
    if (zp::degree(zp::gcd(fp, zp::derivative(fp, p), p)) != 0) continue;
    ++admissible;
    std::size_t count = 0;
    for (const auto& [g, d] : zp::distinct_degree(fp, p)) {
      count += static_cast<std::size_t>(zp::degree(g) / d);
    }
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_count == 1) {
    out.push_back(primitive_part(f));
    return out;
  }
  const u64 p = best_p;
  zp::Poly fp = zp::monic(zp::from_int(f, p), p);
  std::vector<zp::Poly> modular = zp::factor_squarefree(fp, p, rng);

  const Integer bound = 2 * factor_coefficient_bound(f) + 1;
  const Integer pz(static_cast<unsigned long>(p));
  int steps = 0;
  Integer modulus = pz;
  while (modulus <= bound) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<IntPoly> lifted = multi_lift(f, modular, p, steps);

  // Recombination: subsets by increasing size, restarting after each hit.
  std::vector<IntPoly> remaining = lifted;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    const std::size_t r = remaining.size();
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      IntPoly cand = IntPoly::constant(f.lead());
      for (auto i : idx) cand = mod_coeffs(cand * remaining[i], modulus);
      cand = primitive_part(symmetric_coeffs(cand, modulus));
      IntPoly quotient;
      if (cand.degree() > 0 && divides(cand, f, &quotient)) {
        out.push_back(cand);
        f = quotient;
        std::vector<IntPoly> rest;
        for (std::size_t i = 0, k = 0; i < r; ++i) {
          if (k < size && idx[k] == i) {
            ++k;
          } else {
            rest.push_back(remaining[i]);
          }
        }
        remaining = std::move(rest);
        found = true;
        break;
      }
      // next combination
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == r - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (f.degree() > 0) out.push_back(primitive_part(f));
  return out;
}

}  // namespace

Factorization factor_over_rationals(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization result;
  result.unit = content(p);
  if (sgn(p.lead()) < 0) result.unit = -result.unit;
  for (const auto& [g, mult] : squarefree_decomposition(p)) {
    for (auto& h : factor_squarefree_primitive(g)) result.factors.emplace_back(std::move(h), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
  return result;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  Factorization f = factor_over_rationals(p);
  return f.is_irreducible();
}

}  // namespace dtrip
