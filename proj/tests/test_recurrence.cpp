#include <random>

#include "doctest.h"
#include "dtrip/core/roots.hpp"
#include "dtrip/recurrence/recurrence.hpp"
#include "oracles.hpp"

using namespace dtrip;

namespace {

RecurrenceSpec tribonacci() { return make_spec(IntPoly{-1, -1, -1, 1}, {0, 0, 1}); }
RecurrenceSpec fibonacci() { return make_spec(IntPoly{-1, -1, 1}, {0, 1}); }
RecurrenceSpec lucas() { return make_spec(IntPoly{-1, -1, 1}, {2, 1}); }
RecurrenceSpec plastic_exception() { return make_spec(IntPoly{-1, -1, 0, 1}, {6, -9, 2}); }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("validate_pisot_type") {
  CHECK_NOTHROW(validate_pisot_type(tribonacci()));
  CHECK_NOTHROW(validate_pisot_type(fibonacci()));
  try {
    validate_pisot_type(make_spec(IntPoly{-1, 0, 1}, {1, 1}));
    FAIL("accepted reducible");
  } catch (const NotPisotType& e) {
    CHECK(e.reason() == PisotRejection::reducible);
  }
  try {
    validate_pisot_type(make_spec(IntPoly{-1, -1, 1}, {0, 0}));
    FAIL("accepted zero sequence");
  } catch (const NotPisotType& e) {
    CHECK_FALSE(e.reason().has_value());
  }
  CHECK_THROWS_AS(make_spec(IntPoly{-1, -1, 1}, {0}), DomainError);
  CHECK_THROWS_AS(make_spec(IntPoly{-1, -1, 2}, {0, 1}), DomainError);
}

TEST_CASE("eval_range examples") {
  CHECK(eval_range(tribonacci(), 0, 9) == ints({0, 0, 1, 1, 2, 4, 7, 13, 24, 44}));
  CHECK(eval_range(fibonacci(), 10, 10) == ints({55}));
  CHECK(eval_range(plastic_exception(), 3, 7) == ints({-3, -7, -1, -10, -8}));
  CHECK_THROWS_AS(eval_range(fibonacci(), 5, 4), DomainError);
  CHECK_THROWS_AS(eval_range(fibonacci(), -1, 4), DomainError);
}

TEST_CASE("companion powering agrees with recursion") {
  std::mt19937_64 rng(77);
  for (const auto& spec : {tribonacci(), fibonacci(), lucas(), plastic_exception()}) {
    auto all = eval_range(spec, 0, 10000);
    for (int i = 0; i < 50; ++i) {
      unsigned long n = rng() % 10001;
      CHECK(eval_at(spec, n) == all[n]);
    }
  }
  CHECK(eval_at(fibonacci(), 100) == Integer("354224848179261915075"));
}

TEST_CASE("binet_coefficients examples") {
  auto l = binet_coefficients(lucas());
  CHECK(l.f1 == NFElem::one(l.f1.field()));
  CHECK(l.d == 1);

  auto f = binet_coefficients(fibonacci());
  CHECK(f.d == 5);
  CHECK(f.f.coords() == std::vector<Rational>{-1, 2});
  CHECK(f.f1.coords() == std::vector<Rational>{test_oracle::frac(-1, 5), test_oracle::frac(2, 5)});

  auto t = binet_coefficients(tribonacci());
  auto values = eval_range(tribonacci(), 0, 20);
  NFElem alpha = NFElem::generator(t.f1.field());
  NFElem pw = NFElem::one(t.f1.field());
  for (int n = 0; n <= 20; ++n) {
    CHECK(trace(t.f1 * pw) == values[static_cast<std::size_t>(n)]);
    pw *= alpha;
  }
  // d f1 integral and d minimal
  for (const auto& c : t.f.coords()) CHECK(c.get_den() == 1);
}

TEST_CASE("build_from_trace examples") {
  IntPoly g{-1, -1, 1};
  auto l = build_from_trace(g, ints({1}), 1);
  CHECK(l.initial_values == ints({2, 1}));
  auto f = build_from_trace(g, ints({-1, 2}), 5);
  CHECK(f.initial_values == ints({0, 1}));
  try {
    build_from_trace(g, ints({-1, 2}), 7);
    FAIL("accepted non-integral traces");
  } catch (const NonIntegralTrace& e) {
    CHECK(e.index() == 1);
    CHECK(e.value() == test_oracle::frac(5, 7));
    CHECK(std::string(e.what()).find("5/7") != std::string::npos);
  }
  CHECK_THROWS_AS(build_from_trace(IntPoly{-2, 0, 1}, ints({1}), 1), NotPisotType);
  CHECK_THROWS_AS(build_from_trace(g, ints({0, 0}), 1), DomainError);
}

TEST_CASE("numerical Binet check at 256 bits") {
  for (const auto& spec : {tribonacci(), fibonacci(), plastic_exception()}) {
    auto field = NumberField::create(spec.char_poly, NumberField::Roots::isolate, 256);
    auto b = binet_coefficients(spec, field);
    auto values = eval_range(spec, 0, 50);
    std::vector<ComplexBox> f1_embed;
    for (const auto& box : field->root_boxes()) f1_embed.push_back(embed(b.f1, box, 512));
    std::vector<ComplexBox> pw(field->root_boxes().size(), ComplexBox::point(Rational(1), Rational(0)));
    for (int n = 0; n <= 50; ++n) {
      ComplexBox sum = ComplexBox::point(-Rational(values[static_cast<std::size_t>(n)]), Rational(0));
      for (std::size_t i = 0; i < pw.size(); ++i) sum = sum + f1_embed[i] * pw[i];
      CHECK(sum.contains(Rational(0), Rational(0)));
      for (std::size_t i = 0; i < pw.size(); ++i) pw[i] = (pw[i] * field->root_boxes()[i]).rounded(512);
    }
  }
}
