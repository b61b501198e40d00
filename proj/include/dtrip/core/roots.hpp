#pragma once

#include <vector>

#include "dtrip/core/interval.hpp"
#include "dtrip/core/poly.hpp"

namespace dtrip {

// Certified isolation of all complex roots of a squarefree integer
// polynomial. Returns exactly deg(p) pairwise disjoint boxes, each certified
// to contain exactly one root, of width <= 2^-precision_bits. Real roots get
// real boxes; conjugate pairs get mirror-image boxes. Sorted by (real part,
// imaginary part) of the box centres.
//
// Approximations come from Aberth iteration at increasing working precision;
// certification applies Smith's inclusion theorem (the disks
// |z - z_i| <= n |p(z_i) / (lc * prod_{j != i}(z_i - z_j))| cover the roots
// and each isolated disk holds exactly one) in exact rational arithmetic.
// Non-squarefree input is a DomainError.
std::vector<ComplexBox> isolate_roots(const IntPoly& p, unsigned long precision_bits);

// Complex enclosure of p over a box (Horner in rectangle arithmetic),
// endpoints rounded outward to `bits`.
ComplexBox eval_enclosure(const RatPoly& p, const ComplexBox& z, unsigned long bits);

// Real enclosure of p over a real interval.
RatInterval eval_enclosure(const RatPoly& p, const RatInterval& x, unsigned long bits);

}  // namespace dtrip
