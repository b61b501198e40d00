#include "doctest.h"
#include "dtrip/hypothesis/hypothesis.hpp"
#include "oracles.hpp"

using namespace dtrip;

namespace {

FieldPtr golden() { return NumberField::create(IntPoly{-1, -1, 1}); }

}  // namespace

TEST_CASE("squareness examples in Q(phi)") {
  auto q = golden();
  NFElem f1(q, {test_oracle::frac(-1, 5), test_oracle::frac(2, 5)});
  auto v1 = squareness_in_splitting_field(f1);
  CHECK(v1.status == SquareStatus::not_square);
  CHECK(v1.obstruction == Obstruction::norm_not_rational_square);
  CHECK(v1.norm == test_oracle::frac(-1, 5));
  CHECK(v1.degree_ratio == 1);

  auto v2 = squareness_in_splitting_field(f1 * NFElem::generator(q));
  CHECK(v2.status == SquareStatus::not_square);
  CHECK(v2.obstruction == Obstruction::norm_not_rational_square);
  CHECK(v2.norm == test_oracle::frac(1, 5));

  auto v3 = squareness_in_splitting_field(NFElem::rational(q, 5));
  CHECK(v3.status == SquareStatus::square);
  REQUIRE(v3.witness);
  CHECK(*v3.witness == NFElem(q, {-1, 2}));
  CHECK(v3.witness_in_base_field);
}

TEST_CASE("squareness respects the degree cap") {
  auto t = NumberField::create(IntPoly{-1, -1, 0, 1});
  NFElem e(t, {2, 0, 1});
  auto v = squareness_in_splitting_field(e, 2);
  CHECK(v.status == SquareStatus::undecided);
  CHECK(v.reason.find("cap") != std::string::npos);
}

TEST_CASE("negative real embedding obstruction") {
  // e = -(3 - 2 sqrt2) in Q(sqrt2): norm 1, both real embeddings negative
  auto f = NumberField::create(IntPoly{-2, 0, 1});
  NFElem e(f, {-3, 2});
  auto v = squareness_in_splitting_field(e);
  CHECK(v.status == SquareStatus::not_square);
  CHECK(v.obstruction == Obstruction::negative_in_real_embedding);
}

TEST_CASE("theorem_applicability: Tribonacci is finite by the non-square clause") {
  auto r = theorem_applicability(make_spec(IntPoly{-1, -1, -1, 1}, {0, 0, 1}));
  CHECK(r.k == 3);
  CHECK(r.verdict == Verdict::finite_by_nonsquare);
  REQUIRE(r.nonsquare_f1);
  REQUIRE(r.nonsquare_f1alpha);
  CHECK(r.nonsquare_f1->status == SquareStatus::not_square);
  CHECK(r.nonsquare_f1alpha->status == SquareStatus::not_square);
  CHECK(r.nonsquare_f1->splitting_degree == 6);
}

TEST_CASE("theorem_applicability: the plastic exception is unknown with a witness") {
  auto r = theorem_applicability(make_spec(IntPoly{-1, -1, 0, 1}, {6, -9, 2}));
  CHECK(r.verdict == Verdict::unknown);
  REQUIRE(r.nonsquare_f1);
  REQUIRE(r.nonsquare_f1alpha);
  // f1 = 4 - 3 theta^2 is a square in the splitting field, f1 theta is not
  CHECK(r.binet.f1 == NFElem(r.binet.f1.field(), {4, 0, -3}));
  CHECK(r.nonsquare_f1->status == SquareStatus::square);
  CHECK_FALSE(r.nonsquare_f1->witness_in_base_field);
  CHECK(r.nonsquare_f1->splitting_degree == 6);
  auto k = build_splitting_field(IntPoly{-1, -1, 0, 1});
  REQUIRE(r.nonsquare_f1->witness);
  const NFElem& w = *r.nonsquare_f1->witness;
  CHECK(w * w == k.embed(r.binet.f1));
  CHECK(r.nonsquare_f1alpha->status == SquareStatus::not_square);
}

TEST_CASE("theorem_applicability: the other plastic specs are finite") {
  auto r = theorem_applicability(make_spec(IntPoly{-1, -1, 0, 1}, {0, 0, 1}));
  CHECK(r.verdict == Verdict::finite_by_nonsquare);
}

TEST_CASE("degree clauses take precedence") {
  auto tower = family_poly(PisotFamily::tower_a, 3);
  auto r = theorem_applicability(make_spec(tower, {0, 0, 0, 0, 0, 0, 1}));
  CHECK(r.verdict == Verdict::finite_by_k6);
  CHECK_FALSE(r.nonsquare_f1.has_value());
  CHECK(r.alpha_is_unit);
  // non-unit quintic Pisot: x^5 - 3x^4 - 2 (dominant ~3.024)
  IntPoly quintic{-2, 0, 0, 0, -3, 1};
  auto q = theorem_applicability(make_spec(quintic, {1, 0, 0, 0, 0}));
  CHECK(q.verdict == Verdict::finite_by_k5_nonunit);
  CHECK_FALSE(q.alpha_is_unit);
}
