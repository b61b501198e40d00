#include "dtrip/core/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dtrip/core/resultant.hpp"

namespace dtrip {

Rational ComplexBox::modulus_sq_upper() const {
  Rational re_max = std::max(Rational(re_lo * re_lo), Rational(re_hi * re_hi));
  Rational im_max = std::max(Rational(im_lo * im_lo), Rational(im_hi * im_hi));
  return re_max + im_max;
}

Rational ComplexBox::modulus_sq_lower() const {
  auto min_abs = [](const Rational& lo, const Rational& hi) {
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
    return std::min(Rational(abs(lo)), Rational(abs(hi)));
  };
  Rational a = min_abs(re_lo, re_hi);
  Rational b = min_abs(im_lo, im_hi);
  return a * a + b * b;
}

std::string describe(const ComplexBox& box, int digits) {
  std::ostringstream os;
  os << "[" << to_decimal(box.re_lo, digits) << ", " << to_decimal(box.re_hi, digits) << "]";
  if (!box.is_real()) {
    os << " + i[" << to_decimal(box.im_lo, digits) << ", " << to_decimal(box.im_hi, digits) << "]";
  }
  return os.str();
}

ComplexBox eval_enclosure(const RatPoly& p, const ComplexBox& z, unsigned long bits) {
  ComplexBox acc = ComplexBox::point(Rational(0));
  for (int i = p.degree(); i >= 0; --i) {
    acc = (acc * z + ComplexBox::point(p.coeff(i))).rounded(bits);
  }
  return acc;
}

RatInterval eval_enclosure(const RatPoly& p, const RatInterval& x, unsigned long bits) {
  RatInterval acc(Rational(0));
  for (int i = p.degree(); i >= 0; --i) {
    acc = (acc * x + RatInterval(p.coeff(i))).rounded(bits);
  }
  return acc;
}

namespace {

struct Cx {
  mpf_class re;
  mpf_class im;
  explicit Cx(mp_bitcnt_t prec) : re(0, prec), im(0, prec) {}
  Cx(const mpf_class& r, const mpf_class& i, mp_bitcnt_t prec) : re(r, prec), im(i, prec) {}
};

mp_bitcnt_t prec_of(const Cx& z) { return z.re.get_prec(); }

Cx mul(const Cx& a, const Cx& b) {
  mp_bitcnt_t prec = prec_of(a);
  Cx r(prec);
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

Cx div(const Cx& a, const Cx& b) {
  mp_bitcnt_t prec = prec_of(a);
  mpf_class den(b.re * b.re + b.im * b.im, prec);
  Cx r(prec);
  r.re = (a.re * b.re + a.im * b.im) / den;
  r.im = (a.im * b.re - a.re * b.im) / den;
  return r;
}

Cx sub(const Cx& a, const Cx& b) {
  Cx r(prec_of(a));
  r.re = a.re - b.re;
  r.im = a.im - b.im;
  return r;
}

bool is_zero(const Cx& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

mpf_class abs2(const Cx& a) { return mpf_class(a.re * a.re + a.im * a.im, prec_of(a)); }

// Aberth-Ehrlich iteration in place; returns once the largest correction
// falls below 2^-(prec - 8) relative to max(1, |z|) or the iteration cap hits.
void aberth(const IntPoly& p, std::vector<Cx>& z, mp_bitcnt_t prec, int max_iter) {
  const int n = p.degree();
  std::vector<mpf_class> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v, prec);
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec > 16 ? prec - 8 : prec);
  mpf_class tol2(tol * tol, prec);
  for (auto& zi : z) {
    zi.re.set_prec(prec);
    zi.im.set_prec(prec);
  }
  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (int i = 0; i < n; ++i) {
      Cx& zi = z[static_cast<std::size_t>(i)];
      Cx pv(prec);
      Cx dv(prec);
      pv.re = c[static_cast<std::size_t>(n)];
      for (int k = n - 1; k >= 0; --k) {
        dv = mul(dv, zi);
        dv.re += pv.re;
        dv.im += pv.im;
        pv = mul(pv, zi);
        pv.re += c[static_cast<std::size_t>(k)];
      }
      if (is_zero(pv)) continue;
      if (is_zero(dv)) {
        // nudge off a critical point
        zi.re += tol * 1024;
        converged = false;
        continue;
      }
      Cx ratio = div(pv, dv);
      Cx s(prec);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Cx d = sub(zi, z[static_cast<std::size_t>(j)]);
        if (is_zero(d)) continue;
        mpf_class a2 = abs2(d);
        s.re += d.re / a2;
        s.im -= d.im / a2;
      }
      Cx one_minus(prec);
      Cx rs = mul(ratio, s);
      one_minus.re = 1 - rs.re;
      one_minus.im = -rs.im;
      Cx w = is_zero(one_minus) ? ratio : div(ratio, one_minus);
      zi = sub(zi, w);
      mpf_class scale2 = abs2(zi);
      if (scale2 < 1) scale2 = 1;
      if (abs2(w) > tol2 * scale2) converged = false;
    }
    if (converged) return;
  }
}

std::vector<Cx> initial_guesses(const IntPoly& p, mp_bitcnt_t prec) {
  const int n = p.degree();
  // radius from the Fujiwara-style bound 2 max |c_{n-k}/c_n|^(1/k)
  double radius = 0;
  const double lead = std::fabs(p.lead().get_d());
  for (int k = 1; k <= n; ++k) {
    double ck = std::fabs(p.coeff(n - k).get_d()) / lead;
    if (ck > 0) radius = std::max(radius, std::pow(ck, 1.0 / k));
  }
  if (!std::isfinite(radius) || radius <= 0) radius = 1;
  radius *= 1.1;
  std::vector<Cx> z;
  for (int k = 0; k < n; ++k) {
    double angle = 2 * M_PI * k / n + 0.4;
    z.emplace_back(mpf_class(radius * std::cos(angle), prec), mpf_class(radius * std::sin(angle), prec),
                   prec);
  }
  return z;
}

Rational to_dyadic(const mpf_class& v, unsigned long bits) {
  Rational q;
  mpq_set_f(q.get_mpq_t(), v.get_mpf_t());
  return round_down_dyadic(q, bits);
}

struct Certified {
  bool ok = false;
  std::vector<ComplexBox> boxes;
};

Certified certify(const IntPoly& p, const std::vector<Cx>& approx, unsigned long target_bits,
                  unsigned long work) {
  Certified out;
  const int n = p.degree();
  const unsigned long keep = work;
  // Symmetrize: classify real approximations, pair the rest by conjugation.
  Rational real_tol(1);
  mpq_div_2exp(real_tol.get_mpq_t(), real_tol.get_mpq_t(), work / 2);
  std::vector<Rational> re(static_cast<std::size_t>(n));
  std::vector<Rational> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    re[static_cast<std::size_t>(i)] = to_dyadic(approx[static_cast<std::size_t>(i)].re, keep);
    im[static_cast<std::size_t>(i)] = to_dyadic(approx[static_cast<std::size_t>(i)].im, keep);
  }
  std::vector<int> kind(static_cast<std::size_t>(n), 0);  // 0 real, 1 upper, -1 lower
  for (int i = 0; i < n; ++i) {
    auto ui = static_cast<std::size_t>(i);
    Rational scale = std::max(Rational(1), Rational(abs(re[ui]) + abs(im[ui])));
    if (abs(im[ui]) <= real_tol * scale) {
      im[ui] = 0;
    } else {
      kind[ui] = sgn(im[ui]) > 0 ? 1 : -1;
    }
  }
  std::vector<bool> paired(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    auto ui = static_cast<std::size_t>(i);
    if (kind[ui] != 1) continue;
    int best = -1;
    Rational best_d;
    for (int j = 0; j < n; ++j) {
      auto uj = static_cast<std::size_t>(j);
      if (kind[uj] != -1 || paired[uj]) continue;
      Rational dr = re[ui] - re[uj];
      Rational di = im[ui] + im[uj];
      Rational d = dr * dr + di * di;
      if (best < 0 || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best < 0) return out;
    auto ub = static_cast<std::size_t>(best);
    paired[ub] = true;
    re[ub] = re[ui];
    im[ub] = -im[ui];
  }
  for (int i = 0; i < n; ++i) {
    if (kind[static_cast<std::size_t>(i)] == -1 && !paired[static_cast<std::size_t>(i)]) return out;
  }

  // Smith radii, with enclosures rounded outward at `eval_bits`.
  const unsigned long eval_bits = work + 64;
  const RatPoly pr = to_rat(p);
  const Rational lead_sq = Rational(p.lead() * p.lead());
  std::vector<Rational> radius(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto ui = static_cast<std::size_t>(i);
    ComplexBox val = eval_enclosure(pr, ComplexBox::point(re[ui], im[ui]), eval_bits);
    Rational num = val.modulus_sq_upper();
    Rational den = lead_sq;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      auto uj = static_cast<std::size_t>(j);
      Rational dr = re[ui] - re[uj];
      Rational di = im[ui] - im[uj];
      Rational d = dr * dr + di * di;
      if (sgn(d) == 0) return out;
      den = round_down_dyadic(den * d, eval_bits);
      if (sgn(den) == 0) return out;
    }
    Rational r2 = Rational(n * n) * num / den;
    radius[ui] = sqrt_upper(r2, eval_bits);
  }

  Rational max_width(1);
  mpq_div_2exp(max_width.get_mpq_t(), max_width.get_mpq_t(), target_bits);
  std::vector<ComplexBox> boxes;
  for (int i = 0; i < n; ++i) {
    auto ui = static_cast<std::size_t>(i);
    const Rational& r = radius[ui];
    if (2 * r > max_width) return out;
    RatInterval rei(re[ui] - r, re[ui] + r);
    RatInterval imi = kind[ui] == 0 ? RatInterval(Rational(0)) : RatInterval(im[ui] - r, im[ui] + r);
    boxes.emplace_back(rei, imi);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto ui = static_cast<std::size_t>(i);
      auto uj = static_cast<std::size_t>(j);
      Rational dr = re[ui] - re[uj];
      Rational di = im[ui] - im[uj];
      Rational sum = radius[ui] + radius[uj];
      if (dr * dr + di * di <= sum * sum) return out;
      if (boxes[ui].intersects(boxes[uj])) return out;
    }
  }
  std::sort(boxes.begin(), boxes.end(), [](const ComplexBox& a, const ComplexBox& b) {
    Rational ar = a.re_mid();
    Rational br = b.re_mid();
    if (ar != br) return ar < br;
    return a.im_mid() < b.im_mid();
  });
  out.ok = true;
  out.boxes = std::move(boxes);
  return out;
}

}  // namespace

std::vector<ComplexBox> isolate_roots(const IntPoly& p, unsigned long precision_bits) {
  if (p.is_zero()) throw DomainError("isolate_roots: zero polynomial");
  if (precision_bits == 0) throw DomainError("isolate_roots: precision_bits must be positive");
  const int n = p.degree();
  if (n <= 0) return {};
  if (!is_squarefree(p)) throw DomainError("isolate_roots: polynomial is not squarefree");
  if (n == 1) {
    Rational root(-p.coeff(0), p.coeff(1));
    root.canonicalize();
    return {ComplexBox::point(root)};
  }
  unsigned long work = precision_bits + 64 + static_cast<unsigned long>(4 * n);
  std::vector<Cx> approx = initial_guesses(p, 64);
  aberth(p, approx, 64, 500 + 20 * n);
  for (int attempt = 0; attempt < 12; ++attempt) {
    aberth(p, approx, work, 200 + 10 * n);
    Certified c = certify(p, approx, precision_bits, work);
    if (c.ok) return c.boxes;
    work *= 2;
  }
  throw PrecisionExhausted("isolate_roots: could not certify root boxes for " + to_string(p));
}

}  // namespace dtrip
