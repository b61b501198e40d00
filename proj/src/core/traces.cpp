#include "dtrip/core/traces.hpp"

#include <algorithm>

namespace dtrip {

std::vector<Integer> power_traces(const IntPoly& p, int m) {
  if (p.is_zero() || !p.is_monic()) throw DomainError("power_traces: polynomial must be monic");
  if (m < 0) throw DomainError("power_traces: m must be nonnegative");
  const int k = p.degree();
  // x^k + c_{k-1} x^{k-1} + ... + c_0
  std::vector<Integer> s(static_cast<std::size_t>(m) + 1);
  s[0] = k;
  for (int n = 1; n <= m; ++n) {
    Integer acc(0);
    for (int i = 1; i <= std::min(n - 1, k); ++i) acc += p.coeff(k - i) * s[static_cast<std::size_t>(n - i)];
    if (n <= k) acc += n * p.coeff(k - n);
    s[static_cast<std::size_t>(n)] = -acc;
  }
  return s;
}

}  // namespace dtrip
