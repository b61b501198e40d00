#pragma once

#include <optional>
#include <stop_token>
#include <vector>

#include "dtrip/nf/number_field.hpp"

namespace dtrip {

// Univariate polynomial with coefficients in a number field, ascending order,
// trimmed.
class NFPoly {
 public:
  explicit NFPoly(FieldPtr f) : field_(std::move(f)) {}
  NFPoly(FieldPtr f, std::vector<NFElem> coeffs);

  static NFPoly from_rational(const FieldPtr& f, const RatPoly& p);
  // t - r
  static NFPoly linear(const NFElem& r);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<NFElem>& coeffs() const { return c_; }
  NFElem coeff(int i) const;
  const NFElem& lead() const { return c_.back(); }

  NFElem eval(const NFElem& x) const;
  NFPoly monic() const;
  // p(t + s)
  NFPoly shifted(const NFElem& s) const;
  // Applies `map` to every coefficient; result lives in `target`.
  template <class F>
  NFPoly map_coeffs(const FieldPtr& target, F&& map) const {
    std::vector<NFElem> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(map(c));
    return NFPoly(target, std::move(out));
  }

  NFPoly operator-() const;
  friend NFPoly operator+(const NFPoly& a, const NFPoly& b);
  friend NFPoly operator-(const NFPoly& a, const NFPoly& b);
  friend NFPoly operator*(const NFPoly& a, const NFPoly& b);
  friend NFPoly operator*(const NFPoly& a, const NFElem& s);
  friend bool operator==(const NFPoly& a, const NFPoly& b);

 private:
  void trim();

  FieldPtr field_;
  std::vector<NFElem> c_;
};

void divrem(const NFPoly& a, const NFPoly& b, NFPoly& q, NFPoly& r);
// Exact division; InternalError if b does not divide a.
NFPoly exact_div(const NFPoly& a, const NFPoly& b);
// Monic gcd.
NFPoly gcd(const NFPoly& a, const NFPoly& b);

// prod over embeddings of the coefficient field; a polynomial over Q.
RatPoly norm_poly(const NFPoly& g);

// Monic irreducible factors of a squarefree polynomial over its coefficient
// field (Trager: shift until the norm is squarefree, factor over Q, pull back
// with gcds). Order is deterministic.
std::vector<NFPoly> factor_squarefree_over_field(const NFPoly& g, std::stop_token stop = {});

// w with w*w == a, canonical sign (highest nonzero coordinate positive), or
// nullopt when a is not a square in its field.
std::optional<NFElem> nf_sqrt(const NFElem& a, std::stop_token stop = {});

std::string to_string(const NFPoly& p, const std::string& var = "t", const std::string& gen = "a");

}  // namespace dtrip
