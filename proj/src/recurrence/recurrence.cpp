#include "dtrip/recurrence/recurrence.hpp"

#include <algorithm>
#include <utility>

#include "dtrip/core/traces.hpp"

namespace dtrip {

RecurrenceSpec make_spec(IntPoly char_poly, std::vector<Integer> initial_values) {
  if (char_poly.degree() < 1 || !char_poly.is_monic()) {
    throw DomainError("characteristic polynomial must be monic of degree >= 1");
  }
  if (static_cast<int>(initial_values.size()) != char_poly.degree()) {
    throw DomainError("expected " + std::to_string(char_poly.degree()) + " initial values, got " +
                      std::to_string(initial_values.size()));
  }
  return RecurrenceSpec{std::move(char_poly), std::move(initial_values)};
}

NotPisotType::NotPisotType(std::optional<PisotRejection> reason)
    : DomainError(reason ? "recurrence is not of Pisot type: " + to_string(*reason)
                         : "recurrence is not of Pisot type: zero sequence"),
      reason_(reason) {}

PisotCertificate validate_pisot_type(const RecurrenceSpec& spec) {
  PisotResult r = certify_pisot(spec.char_poly);
  if (auto* rej = std::get_if<PisotRejection>(&r)) throw NotPisotType(*rej);
  if (std::all_of(spec.initial_values.begin(), spec.initial_values.end(), [](const Integer& v) { return v == 0; })) {
    throw NotPisotType(std::nullopt);
  }
  return std::get<PisotCertificate>(std::move(r));
}

std::vector<Integer> eval_range(const RecurrenceSpec& spec, long n_lo, long n_hi) {
  if (n_lo < 0 || n_lo > n_hi) throw DomainError("eval_range needs 0 <= n_lo <= n_hi");
  const int k = spec.order();
  std::vector<Integer> window = spec.initial_values;
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (long n = 0; n <= n_hi; ++n) {
    const Integer& cur = window[static_cast<std::size_t>(n % k)];
    if (n >= n_lo) out.push_back(cur);
    // window holds F_n .. F_{n+k-1} cyclically; replace F_n with F_{n+k}
    Integer next(0);
    for (int i = 0; i < k; ++i) next -= spec.char_poly.coeff(i) * window[static_cast<std::size_t>((n + i) % k)];
    window[static_cast<std::size_t>(n % k)] = next;
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<Integer>>;

Matrix mul(const Matrix& a, const Matrix& b) {
  const std::size_t k = a.size();
  Matrix c(k, std::vector<Integer>(k, Integer(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

// Exact solve of m x = rhs over Q by Gauss-Jordan; m nonsingular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t k = m.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) throw InternalError("trace form matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < k; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < k; ++i) rhs[i] /= m[i][i];
  return rhs;
}

}  // namespace

Integer eval_at(const RecurrenceSpec& spec, unsigned long n) {
  const auto k = static_cast<std::size_t>(spec.order());
  // companion matrix acting on (F_n, ..., F_{n+k-1})
  Matrix c(k, std::vector<Integer>(k, Integer(0)));
  for (std::size_t i = 0; i + 1 < k; ++i) c[i][i + 1] = 1;
  for (std::size_t j = 0; j < k; ++j) c[k - 1][j] = -spec.char_poly.coeff(static_cast<int>(j));
  Matrix acc(k, std::vector<Integer>(k, Integer(0)));
  for (std::size_t i = 0; i < k; ++i) acc[i][i] = 1;
  while (n) {
    if (n & 1UL) acc = mul(acc, c);
    n >>= 1UL;
    if (n) c = mul(c, c);
  }
  Integer v(0);
  for (std::size_t j = 0; j < k; ++j) v += acc[0][j] * spec.initial_values[j];
  return v;
}

BinetData binet_coefficients(const RecurrenceSpec& spec, FieldPtr field) {
  const int k = spec.order();
  if (!field) field = NumberField::create(spec.char_poly);
  if (!(field->defining_poly() == spec.char_poly)) throw DomainError("field does not match the recurrence");
  const int window = std::max(2 * k, 20);
  std::vector<Integer> tr = power_traces(spec.char_poly, window + k);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
  std::vector<Rational> rhs;
  for (int n = 0; n < k; ++n) {
    for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] = tr[static_cast<std::size_t>(n + j)];
    rhs.emplace_back(spec.initial_values[static_cast<std::size_t>(n)]);
  }
  std::vector<Rational> v = solve(std::move(m), std::move(rhs));
  std::vector<Integer> values = eval_range(spec, 0, window);
  for (int n = 0; n <= window; ++n) {
    Rational t(0);
    for (int j = 0; j < k; ++j) t += v[static_cast<std::size_t>(j)] * tr[static_cast<std::size_t>(n + j)];
    if (t != values[static_cast<std::size_t>(n)]) {
      throw InternalError("Binet verification failed at n = " + std::to_string(n));
    }
  }
  BinetData out;
  out.f1 = NFElem(field, v);
  out.d = out.f1.denominator();
  out.f = out.f1 * Rational(out.d);
  return out;
}

NonIntegralTrace::NonIntegralTrace(long index, Rational value)
    : DomainError("Tr(f*alpha^n)/d is not an integer at n = " + std::to_string(index) + " (value " + value.get_str() +
                  ")"),
      index_(index), value_(std::move(value)) {}

RecurrenceSpec build_from_trace(const IntPoly& pisot_poly, const std::vector<Integer>& f_coords, const Integer& d) {
  const int k = pisot_poly.degree();
  if (d <= 0) throw DomainError("d must be a positive integer");
  if (static_cast<int>(f_coords.size()) > k) {
    throw DomainError("f has " + std::to_string(f_coords.size()) + " coordinates, field degree is " + std::to_string(k));
  }
  if (std::all_of(f_coords.begin(), f_coords.end(), [](const Integer& c) { return c == 0; })) {
    throw DomainError("f must be nonzero");
  }
  PisotResult cert = certify_pisot(pisot_poly);
  if (auto* rej = std::get_if<PisotRejection>(&cert)) throw NotPisotType(*rej);
  std::vector<Integer> tr = power_traces(pisot_poly, 2 * k);
  std::vector<Integer> init;
  for (int n = 0; n < k; ++n) {
    Integer t(0);
    for (std::size_t j = 0; j < f_coords.size(); ++j) t += f_coords[j] * tr[static_cast<std::size_t>(n) + j];
    Rational q(t, d);
    q.canonicalize();
    if (q.get_den() != 1) throw NonIntegralTrace(n, q);
    init.push_back(q.get_num());
  }
  return RecurrenceSpec{pisot_poly, std::move(init)};
}

std::string to_string(const RecurrenceSpec& spec) {
  std::string s = to_string(spec.char_poly) + "; ";
  for (std::size_t i = 0; i < spec.initial_values.size(); ++i) {
    if (i) s += ",";
    s += spec.initial_values[i].get_str();
  }
  return s;
}

}  // namespace dtrip
