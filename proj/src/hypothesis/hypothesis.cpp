#include "dtrip/hypothesis/hypothesis.hpp"

#include "dtrip/core/roots.hpp"
#include "dtrip/nf/nf_poly.hpp"

namespace dtrip {

std::string to_string(SquareStatus s) {
  switch (s) {
    case SquareStatus::square:
      return "square";
    case SquareStatus::not_square:
      return "not_square";
    case SquareStatus::undecided:
      return "undecided";
  }
  return "undecided";
}

std::string to_string(Obstruction o) {
  switch (o) {
    case Obstruction::norm_not_rational_square:
      return "norm-not-rational-square";
    case Obstruction::negative_in_real_embedding:
      return "negative-in-real-embedding";
    case Obstruction::no_root_in_splitting_field:
      return "no-root-in-splitting-field";
  }
  return "";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::finite_by_nonsquare:
      return "finite-by-nonsquare";
    case Verdict::finite_by_k5_nonunit:
      return "finite-by-k5-nonunit";
    case Verdict::finite_by_k6:
      return "finite-by-k6";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

SquarenessContext::SquarenessContext(FieldPtr base, int degree_cap, std::stop_token stop)
    : base_(std::move(base)), cap_(degree_cap), stop_(std::move(stop)) {}

const SplittingField* SquarenessContext::splitting() {
  if (!attempted_) {
    attempted_ = true;
    try {
      split_ = build_splitting_field(base_->defining_poly(), cap_, stop_);
    } catch (const DegreeCapExceeded& e) {
      cap_message_ = e.what();
    }
  }
  return split_ ? &*split_ : nullptr;
}

SquarenessVerdict SquarenessContext::decide(const NFElem& e) {
  if (e.is_zero()) throw DomainError("squareness of zero is not defined here");
  if (!e.field()->same_as(*base_)) throw DomainError("element is not in the base field");
  SquarenessVerdict v;

  if (auto w = nf_sqrt(e, stop_)) {
    v.status = SquareStatus::square;
    v.witness = *w;
    v.witness_in_base_field = true;
    return v;
  }

  const SplittingField* k = splitting();
  const int base_degree = base_->degree();
  if (k) {
    v.splitting_degree = k->degree;
    const int m = k->degree / base_degree;
    Rational n = norm(e);
    // N^m is a rational square iff m is even or N is
    if (m % 2 == 1 && !is_rational_square(n)) {
      v.status = SquareStatus::not_square;
      v.obstruction = Obstruction::norm_not_rational_square;
      v.norm = n;
      v.degree_ratio = m;
      return v;
    }
  }

  std::vector<ComplexBox> boxes = base_->root_boxes();
  if (boxes.empty()) boxes = isolate_roots(base_->defining_poly(), 128);
  bool totally_real = true;
  for (const auto& b : boxes) totally_real = totally_real && b.is_real();
  if (totally_real) {
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      ComplexBox img = embed(e, boxes[i], 256);
      if (img.re_hi < 0) {
        v.status = SquareStatus::not_square;
        v.obstruction = Obstruction::negative_in_real_embedding;
        v.embedding_index = static_cast<int>(i);
        return v;
      }
    }
  }

  if (!k) {
    v.status = SquareStatus::undecided;
    v.reason = cap_message_;
    return v;
  }
  NFElem ek = k->embed(e);
  if (auto w = nf_sqrt(ek, stop_)) {
    v.status = SquareStatus::square;
    v.witness = *w;
    v.witness_in_base_field = false;
  } else {
    v.status = SquareStatus::not_square;
    v.obstruction = Obstruction::no_root_in_splitting_field;
  }
  return v;
}

SquarenessVerdict squareness_in_splitting_field(const NFElem& e, int degree_cap, std::stop_token stop) {
  SquarenessContext ctx(e.field(), degree_cap, std::move(stop));
  return ctx.decide(e);
}

ApplicabilityReport theorem_applicability(const RecurrenceSpec& spec, int degree_cap, bool force_squareness,
                                          std::stop_token stop) {
  PisotCertificate cert = validate_pisot_type(spec);
  ApplicabilityReport r;
  r.k = spec.order();
  r.alpha_is_unit = is_unit(cert);
  auto field = NumberField::create(spec.char_poly);
  r.binet = binet_coefficients(spec, field);

  bool decided = false;
  if (r.k >= 6) {
    r.verdict = Verdict::finite_by_k6;
    r.clause_citations.push_back("(ii) k>=6");
    decided = true;
  } else if (r.k >= 5 && !r.alpha_is_unit) {
    r.verdict = Verdict::finite_by_k5_nonunit;
    r.clause_citations.push_back("(i) k>=5 and alpha not a unit");
    decided = true;
  }
  if (decided && !force_squareness) return r;

  SquarenessContext ctx(field, degree_cap, std::move(stop));
  r.nonsquare_f1 = ctx.decide(r.binet.f1);
  r.nonsquare_f1alpha = ctx.decide(r.binet.f1 * NFElem::generator(field));
  if (!decided) {
    if (r.nonsquare_f1->status == SquareStatus::not_square && r.nonsquare_f1alpha->status == SquareStatus::not_square) {
      r.verdict = Verdict::finite_by_nonsquare;
      r.clause_citations.push_back("neither f1 nor f1*alpha is a square in the splitting field");
    } else {
      r.verdict = Verdict::unknown;
    }
  }
  return r;
}

}  // namespace dtrip
