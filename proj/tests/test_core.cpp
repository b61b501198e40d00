#include <string>
#include <vector>

#include "doctest.h"
#include "dtrip/core/factor.hpp"
#include "dtrip/core/resultant.hpp"
#include "dtrip/core/roots.hpp"
#include "dtrip/core/traces.hpp"
#include "oracles.hpp"

using namespace dtrip;

TEST_CASE("polynomial parsing and printing round-trip") {
  IntPoly p = parse_int_poly("x^3-x-1");
  CHECK(p == IntPoly{-1, -1, 0, 1});
  CHECK(to_string(p) == "x^3 - x - 1");
  CHECK(parse_int_poly(to_string(p)) == p);
  CHECK(parse_int_poly("2*x^2 + 3x - 5") == IntPoly{-5, 3, 2});
  CHECK(parse_int_poly("-x") == IntPoly{0, -1});
  CHECK(parse_int_poly("7") == IntPoly{7});
  CHECK(parse_coeff_list("-1,-1,0,1") == p);
  CHECK_THROWS_AS(parse_int_poly("x^3-y"), DomainError);
  CHECK_THROWS_AS(parse_int_poly("x^^2"), DomainError);
  CHECK_THROWS_AS(parse_coeff_list("1,a,2"), DomainError);
  try {
    parse_int_poly("x^3+qq-1");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("qq") != std::string::npos);
  }
}

TEST_CASE("resultant examples") {
  SUBCASE("degree-one first argument evaluates q") {
    RatPoly q{Rational(3), Rational(-2), Rational(1)};  // x^2 - 2x + 3
    for (int a = -3; a <= 3; ++a) {
      RatPoly lin{Rational(-a), Rational(1)};
      CHECK(resultant(lin, q) == q.eval(Rational(a)));
    }
  }
  CHECK(resultant(RatPoly{-2, 0, 1}, RatPoly{-1, 1}) == -1);
  CHECK(resultant(RatPoly{-2, 0, 1}, RatPoly{-3, 0, 1}) == 1);
  CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-1, 1}) == -1);
  CHECK_THROWS_AS(resultant(RatPoly(), RatPoly{1, 1}), DomainError);
  // Non-monic with rational coefficients against the Sylvester oracle.
  RatPoly a{Rational(1, 2), Rational(0), Rational(3)};
  RatPoly b{Rational(-2), Rational(5, 3), Rational(0), Rational(7)};
  CHECK(resultant(a, b) == test_oracle::sylvester_resultant(a, b));
  CHECK(resultant(b, a) == test_oracle::sylvester_resultant(b, a));
}

TEST_CASE("discriminant of the plastic polynomial") {
  CHECK(discriminant(RatPoly{-1, -1, 0, 1}) == -23);
  CHECK(discriminant(RatPoly{-1, -3, 0, 1}) == 81);
}

TEST_CASE("factor_over_rationals examples") {
  auto f1 = factor_over_rationals(IntPoly{-1, 0, 1});
  REQUIRE(f1.factors.size() == 2);
  CHECK(f1.factors[0].first == IntPoly{-1, 1});
  CHECK(f1.factors[1].first == IntPoly{1, 1});

  auto f2 = factor_over_rationals(IntPoly{-1, -1, 0, 1});
  CHECK(f2.is_irreducible());
  CHECK(f2.factors[0].first == IntPoly{-1, -1, 0, 1});

  auto f3 = factor_over_rationals(IntPoly{4, 0, 0, 0, 1});
  REQUIRE(f3.factors.size() == 2);
  CHECK(f3.factors[0].first == IntPoly{2, -2, 1});
  CHECK(f3.factors[1].first == IntPoly{2, 2, 1});
  CHECK(f3.factors[0].second == 1);
}

TEST_CASE("factorization with multiplicities, content and sign") {
  // -6 (x - 2)^2 (x^2 + 1)^3 x
  IntPoly p = IntPoly::constant(-6) * pow(IntPoly{-2, 1}, 2) * pow(IntPoly{1, 0, 1}, 3) * IntPoly{0, 1};
  auto f = factor_over_rationals(p);
  CHECK(f.unit == -6);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::make_pair(IntPoly{-2, 1}, 2));
  CHECK(f.factors[1] == std::make_pair(IntPoly{0, 1}, 1));
  CHECK(f.factors[2] == std::make_pair(IntPoly{1, 0, 1}, 3));
  CHECK(f.expand() == p);
}

TEST_CASE("Swinnerton-Dyer polynomial is irreducible despite splitting mod every prime") {
  // minimal polynomial of sqrt2 + sqrt3 + sqrt5
  IntPoly s{576, 0, -960, 0, 352, 0, -40, 0, 1};
  CHECK(is_irreducible(s));
  // product of two such-shaped factors recombines correctly
  IntPoly t{1, 0, -10, 0, 1};  // sqrt2 + sqrt3
  auto f = factor_over_rationals(s * t);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == t);
  CHECK(f.factors[1].first == s);
}

TEST_CASE("non-monic factorization") {
  IntPoly a{1, 2, 3};
  IntPoly b{-5, 0, 0, 4};
  IntPoly c{-1, 6};
  auto f = factor_over_rationals(a * b * c);
  CHECK(f.expand() == a * b * c);
  CHECK(f.factors.size() == 3);
}

TEST_CASE("isolate_roots examples") {
  SUBCASE("x^2 + 1") {
    auto boxes = isolate_roots(IntPoly{1, 0, 1}, 40);
    REQUIRE(boxes.size() == 2);
    CHECK(boxes[0].contains(0, -1));
    CHECK(boxes[1].contains(0, 1));
    CHECK(boxes[0].im_lo == -boxes[1].im_hi);
    CHECK(boxes[0].re_lo == boxes[1].re_lo);
  }
  SUBCASE("golden ratio") {
    auto boxes = isolate_roots(IntPoly{-1, -1, 1}, 50);
    REQUIRE(boxes.size() == 2);
    CHECK(boxes[0].is_real());
    CHECK(boxes[1].is_real());
    // 1.6180339887498948, -0.6180339887498948
    CHECK(boxes[1].re_lo < test_oracle::frac(16180339887499, 10000000000000));
    CHECK(boxes[1].re_hi > test_oracle::frac(16180339887498, 10000000000000));
    CHECK(boxes[0].re_lo < test_oracle::frac(-6180339887498, 10000000000000));
    CHECK(boxes[0].re_hi > test_oracle::frac(-6180339887499, 10000000000000));
    Rational w(1);
    mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 50);
    CHECK(boxes[0].width() <= w);
  }
  SUBCASE("plastic constant") {
    auto boxes = isolate_roots(IntPoly{-1, -1, 0, 1}, 40);
    REQUIRE(boxes.size() == 3);
    // real root sorts last (largest real part)
    CHECK(boxes[2].is_real());
    // 1.3247179572... : the enclosure sits inside the truncation interval
    CHECK(boxes[2].re_lo >= test_oracle::frac(13247179572, 10000000000));
    CHECK(boxes[2].re_hi <= test_oracle::frac(13247179573, 10000000000));
    CHECK(boxes[0].modulus_sq_upper() < 1);
    CHECK(boxes[1].modulus_sq_upper() < 1);
    CHECK_FALSE(boxes[0].is_real());
  }
  CHECK_THROWS_AS(isolate_roots(IntPoly{1, 2, 1}, 20), DomainError);
}

TEST_CASE("isolate_roots separates clustered roots") {
  // (x - 1/1000)(x + 1/1000)(x - 1)(x^2 + 1) scaled to integers
  IntPoly p = IntPoly{-1, 1000} * IntPoly{1, 1000} * IntPoly{-1, 1} * IntPoly{1, 0, 1};
  auto boxes = isolate_roots(p, 64);
  REQUIRE(boxes.size() == 5);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) CHECK_FALSE(boxes[i].intersects(boxes[j]));
  }
  int reals = 0;
  for (const auto& b : boxes) reals += b.is_real() ? 1 : 0;
  CHECK(reals == 3);
}

TEST_CASE("power_traces examples") {
  CHECK(power_traces(IntPoly{-5, 1}, 2) == std::vector<Integer>{1, 5, 25});
  CHECK(power_traces(IntPoly{-1, -1, 1}, 4) == std::vector<Integer>{2, 1, 3, 4, 7});
  CHECK(power_traces(IntPoly{-1, -1, 0, 1}, 5) == std::vector<Integer>{3, 0, 2, 3, 2, 5});
  CHECK_THROWS_AS(power_traces(IntPoly{-1, 2}, 3), DomainError);
}

TEST_CASE("power_traces agree with companion-matrix traces") {
  IntPoly p{3, -2, 0, 5, -1, 1};
  auto traces = power_traces(p, 12);
  for (int n = 0; n <= 12; ++n) CHECK(traces[static_cast<std::size_t>(n)] == test_oracle::companion_trace(p, n));
}
