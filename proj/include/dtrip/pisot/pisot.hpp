#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dtrip/core/interval.hpp"
#include "dtrip/core/poly.hpp"

namespace dtrip {

struct PisotCertificate {
  IntPoly poly;
  ComplexBox dominant_box;
  std::vector<ComplexBox> conjugate_boxes;
  bool is_unit = false;
  unsigned long precision_bits = 0;
};

enum class PisotRejection {
  non_monic,
  degree_lt_2,
  reducible,
  conjugate_outside_unit_disk,
  dominant_not_real_positive,
};

std::string to_string(PisotRejection r);

using PisotResult = std::variant<PisotCertificate, PisotRejection>;

inline constexpr unsigned long kPisotMaxBits = 4096;

// Boxes start at `precision_bits` and are refined by doubling until every root
// is strictly inside or strictly outside the unit circle. Irreducible
// non-reciprocal polynomials have no roots of modulus one, so the loop ends;
// reciprocal ones are decided algebraically. PrecisionExhausted past
// kPisotMaxBits.
PisotResult certify_pisot(const IntPoly& p, unsigned long precision_bits = 64);

bool is_unit(const PisotCertificate& cert);

enum class PisotFamily { tower_a, tower_b, fib_perturbed };

PisotFamily parse_family(const std::string& name);
std::string to_string(PisotFamily f);

// tower-a: X^(2k+1) - (X^(2k) - 1)/(X - 1)
// tower-b: X^(2k+1) - (X^(2k+2) - 1)/(X^2 - 1)
// fib-perturbed: X^k (X^2 - X - 1) + X^2 + 1
IntPoly family_poly(PisotFamily family, int k);

}  // namespace dtrip
