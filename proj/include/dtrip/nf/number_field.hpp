#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dtrip/core/interval.hpp"
#include "dtrip/core/poly.hpp"

namespace dtrip {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(theta) for a monic irreducible integer polynomial, with elements in the
/// power basis 1, theta, ..., theta^(k-1).
///
/// Immutable after construction and safe to share across threads. When built
/// with root isolation, `root_boxes()` holds one certified box per complex
/// embedding; if exactly one root lies outside the closed unit disk and it is
/// real (the Pisot situation), that root is first.
class NumberField {
 public:
  enum class Roots { isolate, skip };

  // Checks that `defining` is monic and irreducible (DomainError otherwise).
  static FieldPtr create(const IntPoly& defining, Roots roots = Roots::isolate,
                         unsigned long root_bits = 128);
  // For polynomials already known to be irreducible (e.g. squarefree norms of
  // irreducible factors); skips the factorization check and root isolation.
  static FieldPtr create_trusted(const IntPoly& defining);

  const IntPoly& defining_poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  const std::vector<ComplexBox>& root_boxes() const { return roots_; }

  // Tr(theta^i) for 0 <= i < degree.
  const std::vector<Integer>& basis_traces() const { return traces_; }

  // Reduces an arbitrary polynomial in theta to power-basis coordinates.
  std::vector<Rational> reduce(std::vector<Rational> coeffs) const;

  bool same_as(const NumberField& other) const { return this == &other || poly_ == other.poly_; }

 private:
  explicit NumberField(IntPoly poly);

  IntPoly poly_;
  std::vector<Integer> traces_;
  std::vector<ComplexBox> roots_;
};

class NFElem {
 public:
  NFElem() = default;
  NFElem(FieldPtr field, std::vector<Rational> coords);

  static NFElem zero(const FieldPtr& f);
  static NFElem one(const FieldPtr& f);
  static NFElem rational(const FieldPtr& f, const Rational& v);
  static NFElem generator(const FieldPtr& f);
  static NFElem from_poly(const FieldPtr& f, const RatPoly& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  RatPoly as_poly() const { return RatPoly(coords_); }

  bool is_zero() const;
  bool is_rational() const;
  // lcm of the coordinate denominators
  Integer denominator() const;

  NFElem inverse() const;
  NFElem pow(unsigned long e) const;

  NFElem operator-() const;
  NFElem& operator+=(const NFElem& o);
  NFElem& operator-=(const NFElem& o);
  NFElem& operator*=(const NFElem& o);
  NFElem& operator/=(const NFElem& o);

  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
  friend NFElem operator/(NFElem a, const NFElem& b) { return a /= b; }
  friend NFElem operator*(NFElem a, const Rational& s) {
    for (auto& c : a.coords_) c *= s;
    return a;
  }
  friend bool operator==(const NFElem& a, const NFElem& b);
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

 private:
  void check_same_field(const NFElem& o) const;

  FieldPtr field_;
  std::vector<Rational> coords_;
};

enum class NFOp { add, sub, mul, div };

// Field arithmetic; mismatched fields and division by zero are DomainErrors.
NFElem nf_arithmetic(const NFElem& a, const NFElem& b, NFOp op);

struct TraceNorm {
  Rational trace;
  Rational norm;
};

Rational trace(const NFElem& a);
Rational norm(const NFElem& a);
TraceNorm nf_trace_norm(const NFElem& a);

// det(t - mult_a), via Newton's identities on Tr(a^j).
RatPoly characteristic_polynomial(const NFElem& a);
// Monic minimal polynomial over Q (squarefree part of the characteristic
// polynomial).
RatPoly nf_minpoly(const NFElem& a);

// Enclosure of the embedding of `a` that sends the generator into `root`.
ComplexBox embed(const NFElem& a, const ComplexBox& root, unsigned long bits = 256);

// Canonical sign for square roots: the highest-degree nonzero coordinate is
// positive.
NFElem canonical_sign(const NFElem& w);

std::string to_string(const NFElem& a, const std::string& var = "a");

}  // namespace dtrip
