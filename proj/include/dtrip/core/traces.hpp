#pragma once

#include <vector>

#include "dtrip/core/poly.hpp"

namespace dtrip {

// [Tr(a^0), ..., Tr(a^m)]: power sums of the roots of a monic integer
// polynomial, by Newton's identities. Non-monic input is a DomainError.
std::vector<Integer> power_traces(const IntPoly& p, int m);

}  // namespace dtrip
