#include "dtrip/nf/number_field.hpp"

#include <algorithm>
#include <utility>

#include "dtrip/core/factor.hpp"
#include "dtrip/core/resultant.hpp"
#include "dtrip/core/roots.hpp"
#include "dtrip/core/traces.hpp"

namespace dtrip {

NumberField::NumberField(IntPoly poly) : poly_(std::move(poly)) {
  traces_ = power_traces(poly_, poly_.degree() - 1);
}

FieldPtr NumberField::create(const IntPoly& defining, Roots roots, unsigned long root_bits) {
  if (defining.degree() < 1 || !defining.is_monic()) {
    throw DomainError("number field: defining polynomial must be monic of degree >= 1");
  }
  if (!is_irreducible(defining)) {
    throw DomainError("number field: defining polynomial " + to_string(defining) + " is reducible");
  }
  auto field = std::shared_ptr<NumberField>(new NumberField(defining));
  if (roots == Roots::isolate) {
    field->roots_ = isolate_roots(defining, root_bits);
    int outside = -1;
    int count = 0;
    for (std::size_t i = 0; i < field->roots_.size(); ++i) {
      if (field->roots_[i].modulus_sq_lower() > 1) {
        outside = static_cast<int>(i);
        ++count;
      }
    }
    if (count == 1 && field->roots_[static_cast<std::size_t>(outside)].is_real()) {
      auto it = field->roots_.begin() + outside;
      std::rotate(field->roots_.begin(), it, it + 1);
    }
  }
  return field;
}

FieldPtr NumberField::create_trusted(const IntPoly& defining) {
  if (defining.degree() < 1 || !defining.is_monic()) {
    throw DomainError("number field: defining polynomial must be monic of degree >= 1");
  }
  return std::shared_ptr<NumberField>(new NumberField(defining));
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> c) const {
  const int k = degree();
  for (int top = static_cast<int>(c.size()) - 1; top >= k; --top) {
    Rational t = c[static_cast<std::size_t>(top)];
    if (t == 0) continue;
    // theta^k = -sum_{i<k} p_i theta^i
    for (int i = 0; i < k; ++i) {
      c[static_cast<std::size_t>(top - k + i)] -= t * poly_.coeff(i);
    }
    c[static_cast<std::size_t>(top)] = 0;
  }
  c.resize(static_cast<std::size_t>(k), Rational(0));
  return c;
}

NFElem::NFElem(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)) {
  coords_ = field_->reduce(std::move(coords));
}

NFElem NFElem::zero(const FieldPtr& f) { return NFElem(f, {}); }
NFElem NFElem::one(const FieldPtr& f) { return NFElem(f, {Rational(1)}); }
NFElem NFElem::rational(const FieldPtr& f, const Rational& v) { return NFElem(f, {v}); }
NFElem NFElem::generator(const FieldPtr& f) { return NFElem(f, {Rational(0), Rational(1)}); }
NFElem NFElem::from_poly(const FieldPtr& f, const RatPoly& p) { return NFElem(f, p.coeffs()); }

bool NFElem::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

Integer NFElem::denominator() const {
  Integer d(1);
  for (const auto& c : coords_) d = lcm(d, c.get_den());
  return d;
}

void NFElem::check_same_field(const NFElem& o) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    throw DomainError("number field mismatch");
  }
}

NFElem NFElem::operator-() const {
  NFElem r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

NFElem& NFElem::operator+=(const NFElem& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& o) {
  check_same_field(o);
  const std::size_t k = coords_.size();
  std::vector<Rational> prod(2 * k - 1, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (o.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  coords_ = field_->reduce(std::move(prod));
  return *this;
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw DomainError("division by zero in number field");
  RatPoly s;
  RatPoly t;
  RatPoly g = xgcd(as_poly(), to_rat(field_->defining_poly()), s, t);
  if (g.degree() != 0) throw InternalError("defining polynomial not irreducible");
  return from_poly(field_, s);
}

NFElem& NFElem::operator/=(const NFElem& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

NFElem NFElem::pow(unsigned long e) const {
  NFElem result = one(field_);
  NFElem base = *this;
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1UL;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const NFElem& a, const NFElem& b) {
  a.check_same_field(b);
  return a.coords_ == b.coords_;
}

NFElem nf_arithmetic(const NFElem& a, const NFElem& b, NFOp op) {
  switch (op) {
    case NFOp::add:
      return a + b;
    case NFOp::sub:
      return a - b;
    case NFOp::mul:
      return a * b;
    case NFOp::div:
      return a / b;
  }
  throw DomainError("unknown number field operation");
}

Rational trace(const NFElem& a) {
  const auto& tr = a.field()->basis_traces();
  Rational sum(0);
  for (std::size_t i = 0; i < a.coords().size(); ++i) sum += a.coords()[i] * tr[i];
  return sum;
}

Rational norm(const NFElem& a) {
  if (a.is_zero()) return Rational(0);
  RatPoly p = a.as_poly();
  if (p.degree() == 0) return rpow(p.lead(), static_cast<unsigned long>(a.field()->degree()));
  // defining polynomial is monic: Res(M, A) = prod A(theta_i)
  return resultant(to_rat(a.field()->defining_poly()), p);
}

TraceNorm nf_trace_norm(const NFElem& a) { return {trace(a), norm(a)}; }

RatPoly characteristic_polynomial(const NFElem& a) {
  const int k = a.field()->degree();
  std::vector<Rational> power_sums(static_cast<std::size_t>(k) + 1);
  NFElem pw = NFElem::one(a.field());
  for (int j = 1; j <= k; ++j) {
    pw *= a;
    power_sums[static_cast<std::size_t>(j)] = trace(pw);
  }
  // elementary symmetric functions e_j from power sums
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1);
  e[0] = 1;
  for (int j = 1; j <= k; ++j) {
    Rational acc(0);
    for (int i = 1; i <= j; ++i) {
      Rational term = e[static_cast<std::size_t>(j - i)] * power_sums[static_cast<std::size_t>(i)];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[static_cast<std::size_t>(j)] = acc / j;
  }
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    Rational v = e[static_cast<std::size_t>(j)];
    if (j % 2 == 1) v = -v;
    c[static_cast<std::size_t>(k - j)] = v;
  }
  return RatPoly(std::move(c));
}

RatPoly nf_minpoly(const NFElem& a) { return squarefree_part(characteristic_polynomial(a)); }

ComplexBox embed(const NFElem& a, const ComplexBox& root, unsigned long bits) {
  return eval_enclosure(a.as_poly(), root, bits);
}

NFElem canonical_sign(const NFElem& w) {
  const auto& c = w.coords();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (*it != 0) return sgn(*it) < 0 ? -w : w;
  }
  return w;
}

std::string to_string(const NFElem& a, const std::string& var) { return to_string(a.as_poly(), var); }

}  // namespace dtrip
