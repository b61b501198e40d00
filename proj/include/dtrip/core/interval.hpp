#pragma once

#include <algorithm>
#include <string>

#include "dtrip/core/integer.hpp"

namespace dtrip {

// Closed interval [lo, hi] with exact rational endpoints.
struct RatInterval {
  Rational lo;
  Rational hi;

  RatInterval() = default;
  RatInterval(const Rational& v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
  RatInterval(const Rational& l, const Rational& h) : lo(l), hi(h) {}

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool positive() const { return sgn(lo) > 0; }
  bool negative() const { return sgn(hi) < 0; }

  // Outward rounding to dyadic endpoints; keeps long products small.
  RatInterval rounded(unsigned long bits) const {
    return {round_down_dyadic(lo, bits), round_up_dyadic(hi, bits)};
  }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo;
    Rational p2 = a.lo * b.hi;
    Rational p3 = a.hi * b.lo;
    Rational p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
};

// Enclosure of |x| for x in the interval.
inline RatInterval abs(const RatInterval& a) {
  if (sgn(a.lo) >= 0) return a;
  if (sgn(a.hi) <= 0) return {-a.hi, -a.lo};
  return {Rational(0), std::max(Rational(-a.lo), a.hi)};
}

/// Axis-parallel rectangle in the complex plane with rational corners.
///
/// Used both as an isolating box for a polynomial root and as a rectangular
/// interval in enclosure arithmetic. A box is "real" when im_lo = im_hi = 0.
struct ComplexBox {
  Rational re_lo;
  Rational re_hi;
  Rational im_lo;
  Rational im_hi;

  ComplexBox() = default;
  ComplexBox(const RatInterval& re, const RatInterval& im)
      : re_lo(re.lo), re_hi(re.hi), im_lo(im.lo), im_hi(im.hi) {}
  static ComplexBox point(const Rational& re, const Rational& im = Rational(0)) {
    return ComplexBox(RatInterval(re), RatInterval(im));
  }

  RatInterval re() const { return {re_lo, re_hi}; }
  RatInterval im() const { return {im_lo, im_hi}; }
  bool is_real() const { return sgn(im_lo) == 0 && sgn(im_hi) == 0; }
  Rational width() const { return std::max(Rational(re_hi - re_lo), Rational(im_hi - im_lo)); }
  Rational re_mid() const { return (re_lo + re_hi) / 2; }
  Rational im_mid() const { return (im_lo + im_hi) / 2; }

  bool contains(const Rational& re, const Rational& im) const {
    return re_lo <= re && re <= re_hi && im_lo <= im && im <= im_hi;
  }
  bool intersects(const ComplexBox& o) const {
    return !(re_hi < o.re_lo || o.re_hi < re_lo || im_hi < o.im_lo || o.im_hi < im_lo);
  }

  // Exact bounds on |z|^2 over the box.
  Rational modulus_sq_upper() const;
  Rational modulus_sq_lower() const;

  ComplexBox conj() const { return ComplexBox(re(), RatInterval(-im_hi, -im_lo)); }

  ComplexBox rounded(unsigned long bits) const { return ComplexBox(re().rounded(bits), im().rounded(bits)); }

  friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(a.re() + b.re(), a.im() + b.im());
  }
  friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(a.re() - b.re(), a.im() - b.im());
  }
  friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    RatInterval ar = a.re();
    RatInterval ai = a.im();
    RatInterval br = b.re();
    RatInterval bi = b.im();
    return ComplexBox(ar * br - ai * bi, ar * bi + ai * br);
  }
};

std::string describe(const ComplexBox& box, int digits = 12);

}  // namespace dtrip
