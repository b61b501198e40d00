#pragma once

#include <stop_token>
#include <vector>

#include "dtrip/nf/number_field.hpp"

namespace dtrip {

inline constexpr int kDefaultDegreeCap = 64;

struct SplittingField {
  IntPoly primitive_poly;
  int degree = 0;
  FieldPtr field;
  FieldPtr base;
  // root_images[0] is the image of the generator of Q(alpha).
  std::vector<NFElem> root_images;

  // Image in K of an element of Q(alpha).
  NFElem embed(const NFElem& e) const;
};

// Adjoins roots of p one irreducible factor at a time. Each step picks the
// smallest nonlinear factor g over the current field L = Q(theta), finds the
// least s >= 1 with beta + s*theta primitive (squarefree norm of g(t - s*theta)),
// and rewrites everything in the new field.
//
// Throws DegreeCapExceeded if the degree would exceed `degree_cap` (including
// degree_cap < deg p), DomainError for reducible or non-monic p, Cancelled when
// `stop` fires.
SplittingField build_splitting_field(const IntPoly& p, int degree_cap = kDefaultDegreeCap,
                                     std::stop_token stop = {});

}  // namespace dtrip
