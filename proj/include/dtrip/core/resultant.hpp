#pragma once

#include "dtrip/core/poly.hpp"

namespace dtrip {

// Res(p, q) = lc(p)^deg(q) * prod q(a) over the roots a of p, i.e. the
// Sylvester determinant. Computed by the subresultant PRS over Z; rational
// inputs are scaled to primitive integer polynomials first. Zero input is a
// DomainError.
Integer resultant(const IntPoly& p, const IntPoly& q);
Rational resultant(const RatPoly& p, const RatPoly& q);

Rational discriminant(const RatPoly& p);

// gcd over Q, returned primitive with positive leading coefficient
// (gcd(0, 0) = 0).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Monic gcd over Q.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

bool is_squarefree(const IntPoly& p);
bool is_squarefree(const RatPoly& p);

// Monic squarefree part p / gcd(p, p').
RatPoly squarefree_part(const RatPoly& p);

// Extended Euclid over Q: returns monic g = gcd(a, b) and fills s, t with
// s*a + t*b = g.
RatPoly xgcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t);

}  // namespace dtrip
