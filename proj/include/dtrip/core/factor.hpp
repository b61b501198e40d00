#pragma once

#include <utility>
#include <vector>

#include "dtrip/core/poly.hpp"

namespace dtrip {

struct Factorization {
  // p = unit * prod factor^multiplicity
  Integer unit;
  // primitive, irreducible over Q, positive leading coefficient; sorted by
  // degree then coefficients (constant term first)
  std::vector<std::pair<IntPoly, int>> factors;

  IntPoly expand() const;
  bool is_irreducible() const { return factors.size() == 1 && factors.front().second == 1; }
};

// Yun's squarefree decomposition of a primitive polynomial: pairs
// (squarefree primitive g_i, i) with p = +-prod g_i^i.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Complete factorization over Q by squarefree decomposition, modular
// factorization (Cantor-Zassenhaus), quadratic Hensel lifting and
// exhaustive recombination.
Factorization factor_over_rationals(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

}  // namespace dtrip
