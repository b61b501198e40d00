#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dtrip/core/integer.hpp"
#include "dtrip/errors.hpp"

namespace dtrip {

/// Dense univariate polynomial with ascending coefficients.
///
/// The stored vector never has trailing zeros, so the zero polynomial is the
/// empty vector and `degree()` is -1 for it. Instantiated for `Integer`
/// (IntPoly) and `Rational` (RatPoly); mpq_class keeps rationals canonical.
template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, int deg) {
    std::vector<T> c(static_cast<std::size_t>(deg) + 1, T(0));
    c.back() = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const T& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : T(0);
  }

  template <typename U>
  U eval_as(const U& at) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + U(*it);
    return acc;
  }
  T eval(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
  }

  // p(x + s)
  Poly shifted(const T& s) const {
    std::vector<T> out(c_);
    const std::size_t n = out.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) out[j - 1] += s * out[j];
    }
    return Poly(std::move(out));
  }

  // p(s * x)
  Poly scaled_var(const T& s) const {
    std::vector<T> out(c_);
    T pw(1);
    for (auto& v : out) {
      v *= pw;
      pw *= s;
    }
    return Poly(std::move(out));
  }

  // p(-x)
  Poly negated_var() const { return scaled_var(T(-1)); }

  // x^deg * p(1/x)
  Poly reversed() const {
    std::vector<T> out(c_.rbegin(), c_.rend());
    return Poly(std::move(out));
  }

  Poly operator-() const {
    std::vector<T> out(c_);
    for (auto& v : out) v = -v;
    return Poly(std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Deterministic order used for factor lists: degree, then coefficients
  // from the constant term upward.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

template <typename T>
Poly<T> pow(const Poly<T>& p, unsigned e) {
  Poly<T> result = Poly<T>::constant(T(1));
  Poly<T> base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

RatPoly to_rat(const IntPoly& p);

// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
Integer content(const IntPoly& p);

// p / content(p), sign normalized so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& p);

// The primitive integer polynomial proportional to p (positive lead).
// `scale`, when given, receives the rational r with p = r * result.
IntPoly primitive_integer(const RatPoly& p, Rational* scale = nullptr);

// Exact integer polynomial from rational coefficients; throws DomainError
// when some coefficient is not integral.
IntPoly to_int_exact(const RatPoly& p);

// Division with remainder over Q; b must be nonzero.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Exact division over Z; throws InternalError when b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// Division over Z returning nothing when the quotient is not integral or
// the remainder is nonzero.
bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);

RatPoly make_monic(const RatPoly& p);

std::string to_string(const IntPoly& p, const std::string& var = "x");
std::string to_string(const RatPoly& p, const std::string& var = "x");

// Parses "x^3-x-1", "2*x^2 + 3x - 5", "-x", "7". Throws DomainError naming
// the offending token.
IntPoly parse_int_poly(const std::string& text);

// Ascending comma-separated coefficients, e.g. "-1,-1,0,1" is x^3 - x - 1.
IntPoly parse_coeff_list(const std::string& text);

}  // namespace dtrip
