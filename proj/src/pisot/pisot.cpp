#include "dtrip/pisot/pisot.hpp"

#include "dtrip/core/factor.hpp"
#include "dtrip/core/roots.hpp"
#include "dtrip/errors.hpp"

namespace dtrip {

std::string to_string(PisotRejection r) {
  switch (r) {
    case PisotRejection::non_monic:
      return "non-monic";
    case PisotRejection::degree_lt_2:
      return "degree<2";
    case PisotRejection::reducible:
      return "reducible";
    case PisotRejection::conjugate_outside_unit_disk:
      return "conjugate-outside-unit-disk";
    case PisotRejection::dominant_not_real_positive:
      return "dominant-not-real-positive";
  }
  return "unknown";
}

namespace {

bool is_reciprocal(const IntPoly& p) {
  IntPoly r = p.reversed();
  return r == p || r == -p;
}

enum class Side { inside, outside, unknown };

Side side(const ComplexBox& b) {
  if (b.modulus_sq_upper() < 1) return Side::inside;
  if (b.modulus_sq_lower() > 1) return Side::outside;
  return Side::unknown;
}

}  // namespace

PisotResult certify_pisot(const IntPoly& p, unsigned long precision_bits) {
  if (p.degree() < 0 || !p.is_monic()) return PisotRejection::non_monic;
  if (p.degree() < 2) return PisotRejection::degree_lt_2;
  if (!is_irreducible(p)) return PisotRejection::reducible;
  // roots of a reciprocal polynomial are closed under z -> 1/z, so a Pisot
  // one has degree 2 and |trace| > 2
  if (is_reciprocal(p) && (p.degree() > 2 || abs(p.coeff(1)) <= 2)) {
    return PisotRejection::conjugate_outside_unit_disk;
  }
  for (unsigned long bits = precision_bits; bits <= kPisotMaxBits; bits *= 2) {
    auto boxes = isolate_roots(p, bits);
    int outside = 0;
    int unknown = 0;
    std::size_t dom = 0;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      switch (side(boxes[i])) {
        case Side::outside:
          ++outside;
          dom = i;
          break;
        case Side::unknown:
          ++unknown;
          break;
        case Side::inside:
          break;
      }
    }
    if (outside >= 2) return PisotRejection::conjugate_outside_unit_disk;
    if (unknown > 0) continue;
    if (outside == 0) return PisotRejection::dominant_not_real_positive;
    const ComplexBox& d = boxes[dom];
    if (!d.is_real() || d.re_lo <= 0) return PisotRejection::dominant_not_real_positive;
    PisotCertificate cert;
    cert.poly = p;
    cert.dominant_box = d;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      if (i != dom) cert.conjugate_boxes.push_back(boxes[i]);
    }
    cert.is_unit = abs(p.coeff(0)) == 1;
    cert.precision_bits = bits;
    return cert;
  }
  throw PrecisionExhausted("certify_pisot: unit-circle separation undecided at " + std::to_string(kPisotMaxBits) +
                           " bits");
}

bool is_unit(const PisotCertificate& cert) { return abs(cert.poly.coeff(0)) == 1; }

PisotFamily parse_family(const std::string& name) {
  if (name == "tower-a") return PisotFamily::tower_a;
  if (name == "tower-b") return PisotFamily::tower_b;
  if (name == "fib-perturbed") return PisotFamily::fib_perturbed;
  throw DomainError("unknown Pisot family '" + name + "' (expected tower-a, tower-b or fib-perturbed)");
}

std::string to_string(PisotFamily f) {
  switch (f) {
    case PisotFamily::tower_a:
      return "tower-a";
    case PisotFamily::tower_b:
      return "tower-b";
    case PisotFamily::fib_perturbed:
      return "fib-perturbed";
  }
  return "unknown";
}

IntPoly family_poly(PisotFamily family, int k) {
  if (k < 3) throw DomainError("family parameter k must be >= 3, got " + std::to_string(k));
  const auto n = static_cast<std::size_t>(k);
  switch (family) {
    case PisotFamily::tower_a: {
      std::vector<Integer> c(2 * n + 2, Integer(-1));
      c[2 * n] = 0;
      c[2 * n + 1] = 1;
      return IntPoly(std::move(c));
    }
    case PisotFamily::tower_b: {
      std::vector<Integer> c(2 * n + 2, Integer(0));
      for (std::size_t i = 0; i <= n; ++i) c[2 * i] = -1;
      c[2 * n + 1] = 1;
      return IntPoly(std::move(c));
    }
    case PisotFamily::fib_perturbed:
      return IntPoly::monomial(Integer(1), k) * IntPoly{-1, -1, 1} + IntPoly{1, 0, 1};
  }
  throw DomainError("unknown Pisot family");
}

}  // namespace dtrip
