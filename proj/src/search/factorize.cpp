#include "dtrip/search/factorize.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include <gmp.h>

namespace dtrip {

namespace {

using Clock = std::chrono::steady_clock;

const Integer& mr_bound() {
  static const Integer b("3317044064679887385961981");
  return b;
}

bool mr_round(const Integer& n, const Integer& d, unsigned long s, const Integer& a) {
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Integer n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n1) return true;
  }
  return false;
}

struct Deadline {
  Clock::time_point end;
  bool expired() const { return Clock::now() >= end; }
};

// A nontrivial factor of composite odd n, or 0 when the deadline passes.
Integer pollard_brent(const Integer& n, const Deadline& dl) {
  for (unsigned long c = 1;; ++c) {
    Integer y(2);
    Integer x;
    Integer ys;
    Integer q(1);
    Integer g(1);
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        if (dl.expired()) return Integer(0);
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = f(y);
          Integer diff = x - y;
          q = q * abs(diff) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = f(ys);
        Integer diff = x - ys;
        g = gcd(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, const Integer& original, const Deadline& dl, long budget_ms,
           std::map<Integer, unsigned>& out, bool& probabilistic) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    if (!is_deterministic_prime_range(n)) probabilistic = true;
    ++out[n];
    return;
  }
  if (is_perfect_square(n)) {
    Integer r = isqrt(n);
    split(r, original, dl, budget_ms, out, probabilistic);
    split(r, original, dl, budget_ms, out, probabilistic);
    return;
  }
  Integer d = pollard_brent(n, dl);
  if (d == 0) throw FactorBudgetExceeded(original, n, budget_ms);
  split(d, original, dl, budget_ms, out, probabilistic);
  split(n / d, original, dl, budget_ms, out, probabilistic);
}

}  // namespace

FactorBudgetExceeded::FactorBudgetExceeded(const Integer& n, const Integer& cofactor, long budget_ms)
    : LimitError("factorization of " + n.get_str() + " exceeded " + std::to_string(budget_ms) +
                 " ms; unfactored cofactor " + cofactor.get_str()),
      cofactor_(cofactor) {}

Integer IntFactorization::expand() const {
  Integer v(1);
  for (const auto& [p, e] : primes) v *= ipow(p, e);
  return v;
}

bool is_deterministic_prime_range(const Integer& n) { return n < mr_bound(); }

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  unsigned long s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (unsigned long p : small) {
    if (!mr_round(n, d, s, Integer(p))) return false;
  }
  if (is_deterministic_prime_range(n)) return true;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x9e3779b97f4a7c15UL);
  for (int i = 0; i < 64; ++i) {
    Integer a = rng.get_z_range(n - 3) + 2;
    if (!mr_round(n, d, s, a)) return false;
  }
  return true;
}

IntFactorization factorize(const Integer& n, long budget_ms) {
  if (n < 1) throw DomainError("factorize needs n >= 1, got " + n.get_str());
  Deadline dl{Clock::now() + std::chrono::milliseconds(budget_ms)};
  std::map<Integer, unsigned> found;
  Integer m = n;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      ++found[Integer(p)];
      m /= p;
    }
  }
  bool probabilistic = false;
  if (m > 1) split(m, n, dl, budget_ms, found, probabilistic);
  IntFactorization f;
  f.primes.assign(found.begin(), found.end());
  f.probabilistic = probabilistic;
  return f;
}

std::vector<Integer> divisors(const IntFactorization& f) {
  std::vector<Integer> ds{Integer(1)};
  for (const auto& [p, e] : f.primes) {
    const std::size_t base = ds.size();
    Integer pk(1);
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace dtrip
