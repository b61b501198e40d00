#pragma once

// Dense polynomials over F_p for word-size odd primes (p < 2^31). Internal
// to the factorization code.

#include <cstdint>
#include <random>
#include <vector>

#include "dtrip/core/poly.hpp"

namespace dtrip::zp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // ascending, trimmed

void trim(Poly& a);
int degree(const Poly& a);
u64 inv_mod(u64 a, u64 p);

Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 s, u64 p);
void divrem(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
// s*a + t*b = gcd (monic)
Poly xgcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t);
Poly derivative(const Poly& a, u64 p);
Poly powmod(const Poly& base, const Integer& e, const Poly& mod, u64 p);

Poly from_int(const IntPoly& f, u64 p);
IntPoly to_int(const Poly& f);

// Distinct-degree factorization of a monic squarefree polynomial: pairs
// (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, u64 p);

// Splits a monic product of irreducibles of equal degree d (Cantor-Zassenhaus).
std::vector<Poly> equal_degree(const Poly& f, int d, u64 p, std::mt19937_64& rng);

// Monic irreducible factors of a monic squarefree polynomial, sorted.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng);

}  // namespace dtrip::zp
