#include "dtrip/search/search.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include <mpfr.h>

#include "dtrip/core/roots.hpp"

namespace dtrip {

const std::vector<long>* MembershipIndex::find(const Integer& v) const {
  auto it = entries.find(v);
  return it == entries.end() ? nullptr : &it->second;
}

namespace {

Rational abs_upper(const ComplexBox& b) { return sqrt_upper(b.modulus_sq_upper(), 64); }

// First N such that F_n lies outside [0, bound] for all n >= N.
long dominance_cutoff(const RecurrenceSpec& spec, const Integer& bound) {
  for (unsigned long bits = 128; bits <= 4096; bits *= 2) {
    auto field = NumberField::create(spec.char_poly, NumberField::Roots::isolate, bits);
    BinetData b = binet_coefficients(spec, field);
    const auto& boxes = field->root_boxes();
    ComplexBox dom = embed(b.f1, boxes[0], 2 * bits);
    if (dom.re_lo <= 0 && dom.re_hi >= 0) continue;
    const bool positive = dom.re_lo > 0;
    Rational d_lo = positive ? dom.re_lo : -dom.re_hi;
    Rational tail(0);
    for (std::size_t i = 1; i < boxes.size(); ++i) tail += abs_upper(embed(b.f1, boxes[i], 2 * bits));
    Rational alpha_lo = round_down_dyadic(boxes[0].re_lo, 64);
    if (alpha_lo <= 1) continue;
    // |F_n - D alpha^n| <= tail, and D alpha^n is monotone in n
    Rational target = positive ? Rational(bound) : Rational(0);
    Rational lead = round_down_dyadic(d_lo, 64);
    for (long n = 0;; ++n) {
      if (lead - tail > target) return n;
      lead = round_down_dyadic(lead * alpha_lo, 64);
    }
  }
  throw PrecisionExhausted("could not certify the sign of the dominant Binet coefficient");
}

bool has_increasing(const TripleHit& h) {
  for (long y : h.ys) {
    bool x_ok = std::any_of(h.xs.begin(), h.xs.end(), [&](long x) { return x < y; });
    bool z_ok = std::any_of(h.zs.begin(), h.zs.end(), [&](long z) { return z > y; });
    if (x_ok && z_ok) return true;
  }
  return false;
}

// Runs fn(i) for i in [0, count) on `workers` threads, striped.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
}

}  // namespace

MembershipIndex build_index(const RecurrenceSpec& spec, const Integer& value_bound) {
  if (value_bound < 1) throw DomainError("value bound must be >= 1");
  validate_pisot_type(spec);
  MembershipIndex idx;
  idx.spec = spec;
  idx.value_bound = value_bound;
  long cutoff = dominance_cutoff(spec, value_bound);
  idx.max_index = std::max(0L, cutoff - 1);
  auto values = eval_range(spec, 0, idx.max_index);
  for (long n = 0; n <= idx.max_index; ++n) {
    const Integer& v = values[static_cast<std::size_t>(n)];
    if (v >= 0 && v <= value_bound) idx.entries[v].push_back(n);
  }
  return idx;
}

SearchInterrupted::SearchInterrupted(const std::string& what, long failed_z, Integer checkpoint_value)
    : LimitError(what + " (at z = " + std::to_string(failed_z) + "; completed all F_z - 1 <= " +
                 checkpoint_value.get_str() + ")"),
      failed_z_(failed_z), checkpoint_(std::move(checkpoint_value)) {}

std::vector<TripleHit> find_triples(const RecurrenceSpec& spec, long c_max, int a_min, const SearchOptions& opts) {
  if (c_max < 3) throw DomainError("c_max must be >= 3");
  if (c_max > 2000000000L) throw DomainError("c_max must be <= 2000000000");
  if (a_min != 1 && a_min != 2) throw DomainError("a_min must be 1 or 2");
  const Integer bound = Integer(c_max) * (c_max - 1) + 1;
  const MembershipIndex idx = build_index(spec, bound);

  std::vector<std::pair<Integer, const std::vector<long>*>> zvals;
  for (const auto& [v, ns] : idx.entries) {
    if (v - 1 >= 2) zvals.emplace_back(v - 1, &ns);
  }

  std::vector<std::vector<TripleHit>> hits(zvals.size());
  std::vector<std::exception_ptr> errors(zvals.size());
  std::vector<char> skipped(zvals.size(), 0);
  parallel_for(zvals.size(), opts.workers, [&](std::size_t i) {
    if (opts.stop.stop_requested()) {
      skipped[i] = 1;
      return;
    }
    try {
      const Integer& bc = zvals[i].first;
      IntFactorization f = factorize(bc, opts.factor_budget_ms);
      for (const Integer& b : divisors(f)) {
        if (b * b >= bc) break;
        Integer c = bc / b;
        if (c > c_max) continue;
        const Integer wmax = b * (b - 1);
        for (const auto& [fx, xs] : idx.entries) {
          Integer w = fx - 1;
          if (w < 1) continue;
          if (w > wmax) break;
          if (w % b != 0) continue;
          Integer a = w / b;
          if (a < a_min || a >= b) continue;
          const std::vector<long>* ys = idx.find(a * c + 1);
          if (!ys) continue;
          TripleHit h;
          h.a = a.get_si();
          h.b = b.get_si();
          h.c = c.get_si();
          h.xs = xs;
          h.ys = *ys;
          h.zs = *zvals[i].second;
          if (a * b + 1 != fx || b * c != bc) {
            throw InternalError("triple re-verification failed");
          }
          h.increasing_witness = has_increasing(h);
          hits[i].push_back(std::move(h));
        }
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });

  std::vector<TripleHit> out;
  for (std::size_t i = 0; i < zvals.size(); ++i) {
    if (errors[i] || skipped[i]) {
      Integer checkpoint = i == 0 ? Integer(0) : zvals[i - 1].first;
      std::string what = "search cancelled";
      if (errors[i]) {
        try {
          std::rethrow_exception(errors[i]);
        } catch (const FactorBudgetExceeded& e) {
          what = e.what();
        }
        // anything else propagates unchanged
      }
      throw SearchInterrupted(what, zvals[i].second->front(), checkpoint);
    }
    for (auto& h : hits[i]) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GcdScanReport gcd_scan(const RecurrenceSpec& spec, long y_lo, long z_hi, unsigned workers) {
  PisotCertificate cert = validate_pisot_type(spec);
  if (z_hi <= y_lo) throw DomainError("gcd_scan needs z_hi > y_lo");
  auto values = eval_range(spec, 0, z_hi);
  long n0 = -1;
  for (long n = 0; n <= z_hi; ++n) {
    if (values[static_cast<std::size_t>(n)] >= 2) {
      n0 = n;
      break;
    }
  }
  if (n0 < 0 || y_lo < n0) {
    throw DomainError("y_lo must be >= the first index with F_n >= 2" +
                      (n0 < 0 ? std::string(" (none up to z_hi)") : " (" + std::to_string(n0) + ")"));
  }
  GcdScanReport rep;
  rep.spec = spec;
  rep.y_lo = y_lo;
  rep.z_hi = z_hi;
  rep.k = spec.order();
  const double kappa = static_cast<double>(rep.k) / (rep.k + 1);

  const mpfr_prec_t prec = 128;
  Rational alpha_hat = (cert.dominant_box.re_lo + cert.dominant_box.re_hi) / 2;
  mpfr_t log_alpha;
  mpfr_init2(log_alpha, prec);
  mpfr_set_q(log_alpha, alpha_hat.get_mpq_t(), MPFR_RNDN);
  mpfr_log(log_alpha, log_alpha, MPFR_RNDN);
  {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.30Rg", log_alpha);
    rep.log_alpha = s;
    mpfr_free_str(s);
  }

  std::vector<Integer> shifted;
  for (const auto& v : values) shifted.push_back(abs(Integer(v - 1)));
  const std::size_t nz = static_cast<std::size_t>(z_hi - y_lo);
  std::vector<std::vector<GcdRecord>> per_z(nz);
  std::vector<std::vector<double>> slack_z(nz);
  parallel_for(nz, workers, [&](std::size_t i) {
    const long z = y_lo + 1 + static_cast<long>(i);
    mpfr_t lg, denom, ratio, slack;
    mpfr_inits2(prec, lg, denom, ratio, slack, static_cast<mpfr_ptr>(nullptr));
    mpfr_mul_si(denom, log_alpha, z, MPFR_RNDN);
    for (long y = y_lo; y < z; ++y) {
      GcdRecord r;
      r.y = y;
      r.z = z;
      r.g = gcd(shifted[static_cast<std::size_t>(y)], shifted[static_cast<std::size_t>(z)]);
      if (r.g == 0) r.g = 1;
      mpfr_set_z(lg, r.g.get_mpz_t(), MPFR_RNDN);
      mpfr_log(lg, lg, MPFR_RNDN);
      mpfr_div(ratio, lg, denom, MPFR_RNDN);
      r.ratio = mpfr_get_d(ratio, MPFR_RNDN);
      // ln g - kappa z ln alpha
      mpfr_mul_d(slack, denom, kappa, MPFR_RNDN);
      mpfr_sub(slack, lg, slack, MPFR_RNDN);
      slack_z[i].push_back(mpfr_get_d(slack, MPFR_RNDN));
      per_z[i].push_back(std::move(r));
    }
    mpfr_clears(lg, denom, ratio, slack, static_cast<mpfr_ptr>(nullptr));
  });
  mpfr_clear(log_alpha);

  bool first = true;
  for (std::size_t i = 0; i < nz; ++i) {
    for (std::size_t j = 0; j < per_z[i].size(); ++j) {
      const GcdRecord& r = per_z[i][j];
      if (first || r.ratio > rep.max_ratio) {
        rep.max_ratio = r.ratio;
        rep.max_ratio_y = r.y;
        rep.max_ratio_z = r.z;
      }
      if (first || slack_z[i][j] > rep.fitted_slack) rep.fitted_slack = slack_z[i][j];
      first = false;
    }
    for (auto& r : per_z[i]) rep.records.push_back(std::move(r));
  }
  std::sort(rep.records.begin(), rep.records.end(),
            [](const GcdRecord& a, const GcdRecord& b) { return a.y != b.y ? a.y < b.y : a.z < b.z; });
  return rep;
}

bool is_diophantine(const std::vector<Integer>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!is_perfect_square(set[i] * set[j] + 1)) return false;
  return true;
}

Quadruple euler_quadruple(const Integer& a, const Integer& b) {
  if (a <= 0 || b <= 0) throw DomainError("a and b must be positive");
  Integer ab1 = a * b + 1;
  auto r = exact_sqrt(ab1);
  if (!r) throw DomainError("ab+1 = " + ab1.get_str() + " is not a perfect square");
  Quadruple q{a, b, a + b + 2 * *r, 4 * *r * (a + *r) * (b + *r)};
  if (!is_diophantine({q.a, q.b, q.c, q.d})) throw InternalError("euler_quadruple verification failed");
  return q;
}

Integer dplus_extension(const Integer& a, const Integer& b, const Integer& c) {
  if (a <= 0 || b <= 0 || c <= 0) throw DomainError("a, b, c must be positive");
  auto root = [](const Integer& x, const Integer& y) {
    Integer v = x * y + 1;
    auto s = exact_sqrt(v);
    if (!s) {
      throw DomainError("pair (" + x.get_str() + "," + y.get_str() + "): " + v.get_str() + " is not a perfect square");
    }
    return *s;
  };
  Integer r = root(a, b);
  Integer s = root(a, c);
  Integer t = root(b, c);
  Integer d = a + b + c + 2 * a * b * c + 2 * r * s * t;
  if (!is_diophantine({a, b, c, d})) throw InternalError("dplus_extension verification failed");
  return d;
}

}  // namespace dtrip
