#pragma once

#include <utility>
#include <vector>

#include "dtrip/core/integer.hpp"
#include "dtrip/errors.hpp"

namespace dtrip {

inline constexpr long kDefaultFactorBudgetMs = 5000;

struct IntFactorization {
  // ascending primes with exponents
  std::vector<std::pair<Integer, unsigned>> primes;
  // some prime factor exceeds the deterministic Miller-Rabin range
  bool probabilistic = false;

  Integer expand() const;
};

class FactorBudgetExceeded : public LimitError {
 public:
  FactorBudgetExceeded(const Integer& n, const Integer& cofactor, long budget_ms);
  const Integer& cofactor() const { return cofactor_; }

 private:
  Integer cofactor_;
};

// Deterministic for n < 3.317e24 (bases 2..41); 64 seeded random rounds above.
bool is_probable_prime(const Integer& n);
bool is_deterministic_prime_range(const Integer& n);

// Trial division, then Pollard-Brent under a wall-clock budget.
IntFactorization factorize(const Integer& n, long budget_ms = kDefaultFactorBudgetMs);

// All positive divisors, ascending.
std::vector<Integer> divisors(const IntFactorization& f);

}  // namespace dtrip
