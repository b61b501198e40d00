#include "dtrip/nf/nf_poly.hpp"

#include <algorithm>
#include <utility>

#include "dtrip/core/factor.hpp"
#include "dtrip/core/resultant.hpp"

namespace dtrip {

NFPoly::NFPoly(FieldPtr f, std::vector<NFElem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

void NFPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

NFPoly NFPoly::from_rational(const FieldPtr& f, const RatPoly& p) {
  std::vector<NFElem> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(NFElem::rational(f, v));
  return NFPoly(f, std::move(c));
}

NFPoly NFPoly::linear(const NFElem& r) { return NFPoly(r.field(), {-r, NFElem::one(r.field())}); }

NFElem NFPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return NFElem::zero(field_);
  return c_[static_cast<std::size_t>(i)];
}

NFElem NFPoly::eval(const NFElem& x) const {
  NFElem acc = NFElem::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

NFPoly NFPoly::monic() const {
  if (is_zero()) return *this;
  NFElem inv = lead().inverse();
  return *this * inv;
}

NFPoly NFPoly::shifted(const NFElem& s) const {
  // Horner in t + s
  NFPoly acc(field_);
  NFPoly lin(field_, {s, NFElem::one(field_)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + NFPoly(field_, {*it});
  return acc;
}

NFPoly NFPoly::operator-() const {
  NFPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

NFPoly operator+(const NFPoly& a, const NFPoly& b) {
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<NFElem> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
  return NFPoly(a.field_, std::move(c));
}

NFPoly operator-(const NFPoly& a, const NFPoly& b) { return a + (-b); }

NFPoly operator*(const NFPoly& a, const NFPoly& b) {
  if (a.is_zero() || b.is_zero()) return NFPoly(a.field_);
  std::vector<NFElem> c(a.c_.size() + b.c_.size() - 1, NFElem::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return NFPoly(a.field_, std::move(c));
}

NFPoly operator*(const NFPoly& a, const NFElem& s) {
  NFPoly r(a);
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

bool operator==(const NFPoly& a, const NFPoly& b) { return a.c_ == b.c_; }

void divrem(const NFPoly& a, const NFPoly& b, NFPoly& q, NFPoly& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const FieldPtr& f = a.field();
  r = a;
  std::vector<NFElem> qc(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), NFElem::zero(f));
  NFElem inv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    NFElem factor = r.lead() * inv;
    qc[static_cast<std::size_t>(shift)] = factor;
    std::vector<NFElem> sub(static_cast<std::size_t>(shift), NFElem::zero(f));
    for (const auto& c : b.coeffs()) sub.push_back(c * factor);
    r = r - NFPoly(f, std::move(sub));
  }
  q = NFPoly(f, std::move(qc));
}

NFPoly exact_div(const NFPoly& a, const NFPoly& b) {
  NFPoly q(a.field());
  NFPoly r(a.field());
  divrem(a, b, q, r);
  if (!r.is_zero()) throw InternalError("exact_div: nonzero remainder");
  return q;
}

NFPoly gcd(const NFPoly& a, const NFPoly& b) {
  NFPoly x = a;
  NFPoly y = b;
  while (!y.is_zero()) {
    NFPoly q(a.field());
    NFPoly r(a.field());
    divrem(x, y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

namespace {

// Newton interpolation through (i, ys[i]), i = 0..n-1.
RatPoly interpolate_at_integers(const std::vector<Rational>& ys) {
  const std::size_t n = ys.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
    }
  }
  RatPoly result;
  for (std::size_t i = n; i-- > 0;) {
    // result = result * (x - i) + dd[i]
    result = result * RatPoly{Rational(-static_cast<long>(i)), Rational(1)} + RatPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace

RatPoly norm_poly(const NFPoly& g) {
  if (g.is_zero()) return RatPoly();
  const FieldPtr& f = g.field();
  const int n = f->degree() * g.degree();
  std::vector<Rational> ys;
  ys.reserve(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) ys.push_back(norm(g.eval(NFElem::rational(f, Rational(t)))));
  return interpolate_at_integers(ys);
}

std::vector<NFPoly> factor_squarefree_over_field(const NFPoly& g, std::stop_token stop) {
  if (g.is_zero()) throw DomainError("cannot factor the zero polynomial");
  NFPoly monic = g.monic();
  if (monic.degree() <= 1) return {monic};
  const FieldPtr& f = g.field();
  NFElem theta = NFElem::generator(f);
  for (long s = 0;; ++s) {
    if (stop.stop_requested()) throw Cancelled();
    NFElem shift = theta * Rational(s);
    NFPoly gs = monic.shifted(-shift);  // g(t - s*theta)
    RatPoly n = norm_poly(gs);
    if (!is_squarefree(n)) {
      if (s > 64 * f->degree()) throw InternalError("no squarefree norm shift found");
      continue;
    }
    Rational scale;
    IntPoly ni = primitive_integer(n, &scale);
    Factorization fac = factor_over_rationals(ni);
    std::vector<NFPoly> out;
    for (const auto& [h, mult] : fac.factors) {
      (void)mult;
      NFPoly hf = NFPoly::from_rational(f, to_rat(h));
      NFPoly piece = gcd(gs, hf);
      if (piece.degree() >= 1) out.push_back(piece.shifted(shift));
    }
    int total = 0;
    for (const auto& p : out) total += p.degree();
    if (total != monic.degree()) throw InternalError("Trager factorization degree mismatch");
    return out;
  }
}

std::optional<NFElem> nf_sqrt(const NFElem& a, std::stop_token stop) {
  const FieldPtr& f = a.field();
  if (a.is_zero()) return a;
  if (a.is_rational() && is_rational_square(a.coords()[0])) {
    Rational r = a.coords()[0];
    return NFElem::rational(f, Rational(*exact_sqrt(r.get_num()), *exact_sqrt(r.get_den())));
  }
  // N(w^2) = N(w)^2
  if (!is_rational_square(norm(a))) return std::nullopt;
  NFPoly t2 = NFPoly(f, {-a, NFElem::zero(f), NFElem::one(f)});
  for (const auto& piece : factor_squarefree_over_field(t2, stop)) {
    if (piece.degree() == 1) {
      NFElem w = -piece.coeff(0);
      if (w * w != a) throw InternalError("nf_sqrt: witness check failed");
      return canonical_sign(w);
    }
  }
  return std::nullopt;
}

std::string to_string(const NFPoly& p, const std::string& var, const std::string& gen) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    NFElem c = p.coeff(i);
    if (c.is_zero()) continue;
    std::string cs = to_string(c, gen);
    bool simple = c.is_rational();
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (i == 0) {
      term = simple ? cs : "(" + cs + ")";
    } else if (simple && cs == "1") {
      term = mono;
    } else if (simple && cs == "-1") {
      term = "-" + mono;
    } else {
      term = (simple ? cs : "(" + cs + ")") + "*" + mono;
    }
    if (!out.empty()) {
      if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    } else {
      out = term;
    }
  }
  return out;
}

}  // namespace dtrip
