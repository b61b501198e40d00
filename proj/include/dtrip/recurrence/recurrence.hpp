#pragma once

#include <optional>
#include <vector>

#include "dtrip/errors.hpp"
#include "dtrip/nf/number_field.hpp"
#include "dtrip/pisot/pisot.hpp"

namespace dtrip {

// F_{n+k} = -(p_{k-1} F_{n+k-1} + ... + p_0 F_n) for the monic char_poly p.
struct RecurrenceSpec {
  IntPoly char_poly;
  std::vector<Integer> initial_values;

  int order() const { return char_poly.degree(); }
};

// Checks shape only: monic, degree >= 1, k initial values.
RecurrenceSpec make_spec(IntPoly char_poly, std::vector<Integer> initial_values);

// A spec that is not of Pisot type. `reason` is empty for the zero sequence.
class NotPisotType : public DomainError {
 public:
  explicit NotPisotType(std::optional<PisotRejection> reason);
  const std::optional<PisotRejection>& reason() const { return reason_; }

 private:
  std::optional<PisotRejection> reason_;
};

PisotCertificate validate_pisot_type(const RecurrenceSpec& spec);

std::vector<Integer> eval_range(const RecurrenceSpec& spec, long n_lo, long n_hi);

// Single value by binary powering of the companion matrix.
Integer eval_at(const RecurrenceSpec& spec, unsigned long n);

// f1 = f / d with f integral in the power basis and d minimal.
struct BinetData {
  NFElem f1;
  Integer d;
  NFElem f;
};

// Solves sum_j Tr(alpha^(n+j)) v_j = F_n, n < k, and verifies the trace
// identity on n <= max(2k, 20). Pass `field` to reuse an existing Q(alpha).
BinetData binet_coefficients(const RecurrenceSpec& spec, FieldPtr field = nullptr);

class NonIntegralTrace : public DomainError {
 public:
  NonIntegralTrace(long index, Rational value);
  long index() const { return index_; }
  const Rational& value() const { return value_; }

 private:
  long index_;
  Rational value_;
};

// F_n = Tr(f alpha^n) / d for n < k.
RecurrenceSpec build_from_trace(const IntPoly& pisot_poly, const std::vector<Integer>& f_coords, const Integer& d);

std::string to_string(const RecurrenceSpec& spec);

}  // namespace dtrip
