#include "dtrip/nf/splitting_field.hpp"

#include <algorithm>
#include <utility>

#include "dtrip/core/factor.hpp"
#include "dtrip/core/resultant.hpp"
#include "dtrip/nf/nf_poly.hpp"

namespace dtrip {

namespace {

// Coordinates of an element of L, read as a polynomial in L's generator and
// evaluated at `image` (the generator's image in the next field).
NFElem remap(const NFElem& e, const NFElem& image) {
  NFElem acc = NFElem::zero(image.field());
  const auto& c = e.coords();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image + NFElem::rational(image.field(), *it);
  return acc;
}

NFPoly remap(const NFPoly& p, const NFElem& image) {
  return p.map_coeffs(image.field(), [&](const NFElem& c) { return remap(c, image); });
}

}  // namespace

NFElem SplittingField::embed(const NFElem& e) const {
  if (!base || !e.field()->same_as(*base)) throw DomainError("embed: element is not in the base field");
  return remap(e, root_images.front());
}

SplittingField build_splitting_field(const IntPoly& p, int degree_cap, std::stop_token stop) {
  if (p.degree() < 1 || !p.is_monic()) throw DomainError("splitting field: polynomial must be monic");
  const int k = p.degree();
  if (degree_cap < k) throw DegreeCapExceeded(degree_cap, 1, k);
  FieldPtr L = NumberField::create(p, NumberField::Roots::skip);
  const FieldPtr base = L;

  NFElem theta = NFElem::generator(L);
  std::vector<NFElem> roots{theta};
  NFPoly q = exact_div(NFPoly::from_rational(L, to_rat(p)), NFPoly::linear(theta));
  while (q.degree() >= 1) {
    if (stop.stop_requested()) throw Cancelled();
    std::vector<NFPoly> nonlinear;
    for (auto& f : factor_squarefree_over_field(q, stop)) {
      if (f.degree() == 1) {
        roots.push_back(-f.coeff(0));
      } else {
        nonlinear.push_back(std::move(f));
      }
    }
    if (nonlinear.empty()) break;
    std::stable_sort(nonlinear.begin(), nonlinear.end(),
                     [](const NFPoly& a, const NFPoly& b) { return a.degree() < b.degree(); });
    const NFPoly& g = nonlinear.front();
    const long next_degree = static_cast<long>(L->degree()) * g.degree();
    if (next_degree > degree_cap) throw DegreeCapExceeded(degree_cap, L->degree(), next_degree);

    // gamma = beta + s*theta is primitive iff Norm(g(t - s*theta)) is squarefree
    long s = 1;
    RatPoly n;
    for (;; ++s) {
      if (stop.stop_requested()) throw Cancelled();
      n = norm_poly(g.shifted(-(theta * Rational(s))));
      if (is_squarefree(n)) break;
      if (s > 64L * next_degree) throw InternalError("no primitive element found");
    }
    FieldPtr next = NumberField::create_trusted(to_int_exact(n));
    NFElem gamma = NFElem::generator(next);

    // theta in the new field: the common root of M_L(y) and g(gamma - s*y, y)
    NFPoly y_lin(next, {gamma, NFElem::rational(next, Rational(-s))});
    NFPoly g_sub(next);
    NFPoly y_pow(next, {NFElem::one(next)});
    for (int i = 0; i <= g.degree(); ++i) {
      NFPoly ci = NFPoly::from_rational(next, g.coeff(i).as_poly());
      g_sub = g_sub + ci * y_pow;
      y_pow = y_pow * y_lin;
    }
    NFPoly m = NFPoly::from_rational(next, to_rat(L->defining_poly()));
    NFPoly common = gcd(m, g_sub);
    if (common.degree() != 1) throw InternalError("primitive element recovery failed");
    NFElem theta_img = -common.coeff(0);
    NFElem beta = gamma - theta_img * Rational(s);

    for (auto& r : roots) r = remap(r, theta_img);
    roots.push_back(beta);
    NFPoly rest = exact_div(remap(g, theta_img), NFPoly::linear(beta));
    for (std::size_t i = 1; i < nonlinear.size(); ++i) rest = rest * remap(nonlinear[i], theta_img);
    L = next;
    theta = gamma;
    q = std::move(rest);
  }

  if (static_cast<int>(roots.size()) != k) throw InternalError("splitting field: wrong number of roots");
  NFPoly pk = NFPoly::from_rational(L, to_rat(p));
  for (const auto& r : roots) {
    if (!pk.eval(r).is_zero()) throw InternalError("splitting field: root image check failed");
  }
  SplittingField out;
  out.primitive_poly = L->defining_poly();
  out.degree = L->degree();
  out.field = L;
  out.base = base;
  out.root_images = std::move(roots);
  return out;
}

}  // namespace dtrip
