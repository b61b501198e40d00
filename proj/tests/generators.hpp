#pragma once

// Hand-rolled random generators for the property tests. Fixed seeds keep
// failures reproducible.

#include <random>
#include <vector>

#include "dtrip/core/factor.hpp"
#include "dtrip/core/poly.hpp"

namespace gen {

using dtrip::Integer;
using dtrip::IntPoly;
using dtrip::Rational;

class Rng {
 public:
  explicit Rng(unsigned long long seed) : eng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return range(0, 1) == 1; }

  Rational rational(long num_bound, long den_bound) {
    Rational q(range(-num_bound, num_bound), range(1, den_bound));
    q.canonicalize();
    return q;
  }

  std::vector<Rational> rational_vector(std::size_t n, long num_bound, long den_bound) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(num_bound, den_bound));
    return v;
  }

  IntPoly int_poly(int degree, long bound) {
    std::vector<Integer> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(range(-bound, bound));
    long lead = 0;
    while (lead == 0) lead = range(-bound, bound);
    c.emplace_back(lead);
    return IntPoly(std::move(c));
  }

  IntPoly monic_poly(int degree, long bound) {
    std::vector<Integer> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(range(-bound, bound));
    c.emplace_back(1);
    return IntPoly(std::move(c));
  }

  // |c_{k-1}| > 1 + sum of the other |c_i| with c_{k-1} < 0 and c_0 != 0:
  // irreducible with exactly one root outside the unit disk, real and > 1.
  IntPoly perron_pisot(int degree, long bound) {
    std::vector<Integer> c;
    Integer rest(0);
    for (int i = 0; i < degree - 1; ++i) {
      long v = range(-bound, bound);
      if (i == 0)
        while (v == 0) v = range(-bound, bound);
      c.emplace_back(v);
      rest += v < 0 ? -v : v;
    }
    c.emplace_back(-(rest + 1 + range(1, 2)));
    c.emplace_back(1);
    return IntPoly(std::move(c));
  }

  std::vector<Integer> integers(std::size_t n, long bound) {
    std::vector<Integer> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(range(-bound, bound));
    return v;
  }

  IntPoly monic_irreducible(int degree, long bound) {
    for (;;) {
      IntPoly p = monic_poly(degree, bound);
      if (p.coeff(0) != 0 && dtrip::is_irreducible(p)) return p;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gen
