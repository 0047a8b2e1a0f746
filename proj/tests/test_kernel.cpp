#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"
#include "tsg/linalg.hpp"

using namespace tsg;
using tsg::testing::Gen;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i); }

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3") == q(3));
  CHECK(parse_rational(" -4/6 ") == q(-2, 3));
  CHECK(format_rational(q(-2, 3)) == "-2/3");
  CHECK(format_rational(q(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("6/-4"), Error);
  const Rational r = parse_rational("-6/4");
  CHECK(r == q(-3, 2));
  CHECK(r.get_den() > 0);
}

TEST_CASE("best rational approximation") {
  CHECK(best_rational_approximation(0.5, 10) == q(1, 2));
  CHECK(best_rational_approximation(-1.0 / 3.0, 1000000) == q(-1, 3));
  CHECK(best_rational_approximation(3.14159265358979, 7) == q(22, 7));
  CHECK(best_rational_approximation(2.0, 1) == q(2));
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(zero_matrix(3, 3)).size() == 3);
  CHECK(nullspace(identity_matrix(4)).empty());
  const RatMatrix m{{q(1), q(1)}, {q(2), q(2)}};
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  // proportional to (1, -1)
  CHECK(ns[0][0] == -ns[0][1]);
  CHECK(sgn(ns[0][0]) != 0);
}

TEST_CASE("nullspace vectors annihilate and count cols - rank") {
  Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = gen.integer(1, 6), c = gen.integer(1, 7);
    const RatMatrix m = gen.matrix(r, c, 2);
    const auto ns = nullspace(m);
    CHECK(ns.size() == c - testing::naive_rank(m));
    CHECK(rank(m) == testing::naive_rank(m));
    for (const auto& v : ns) CHECK(is_zero(m * v));
  }
}

TEST_CASE("solve, determinant and inverse") {
  Gen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen.integer(1, 5);
    const RatMatrix m = gen.matrix(n, n, 1);
    CHECK(determinant(m) == testing::leibniz_determinant(m));
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (sgn(determinant(m)) != 0));
    if (inv) CHECK(m * *inv == identity_matrix(n));
    RatVector b(n);
    for (auto& x : b) x = gen.rational();
    const auto x = solve(m, b);
    if (x) CHECK(m * *x == b);
  }
  const RatMatrix sing{{q(1), q(2)}, {q(2), q(4)}};
  CHECK_FALSE(solve(sing, {q(1), q(0)}).has_value());
}

TEST_CASE("pfaffian base cases") {
  const RatMatrix j{{q(0), q(1)}, {q(-1), q(0)}};
  CHECK(pfaffian(j) == 1);
  RatMatrix j4 = zero_matrix(4, 4);
  j4(0, 1) = 1;
  j4(1, 0) = -1;
  j4(2, 3) = 1;
  j4(3, 2) = -1;
  CHECK(pfaffian(j4) == 1);
  CHECK_THROWS_AS(pfaffian(zero_matrix(3, 3)), Error);
  RatMatrix bad = zero_matrix(2, 2);
  bad(0, 1) = 1;
  bad(1, 0) = 1;
  try {
    pfaffian(bad);
    FAIL("expected NotSkewSymmetric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSkewSymmetric);
  }
  try {
    pfaffian(zero_matrix(3, 3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddDimension);
  }
}

TEST_CASE("generic 4x4 pfaffian is af - be + cd") {
  Gen gen(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational a = gen.rational(), b = gen.rational(), c = gen.rational(), d = gen.rational(),
                   e = gen.rational(), f = gen.rational();
    const RatMatrix m{{0, a, b, c}, {-a, 0, d, e}, {-b, -d, 0, f}, {-c, -e, -f, 0}};
    CHECK(pfaffian(m) == a * f - b * e + c * d);
  }
}

TEST_CASE("pfaffian agrees with the matching-sum oracle and squares to det") {
  Gen gen(14);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 * gen.integer(1, 3);
    const RatMatrix m = gen.skew(n);
    const Rational pf = pfaffian(m);
    CHECK(pf == testing::matching_pfaffian(m));
    CHECK(pf * pf == testing::leibniz_determinant(m));
  }
}

TEST_CASE("poly_pfaffian") {
  const RatMatrix c{{0, q(2), q(1), 0}, {q(-2), 0, 0, q(3)}, {q(-1), 0, 0, q(5)}, {0, q(-3), q(-5), 0}};
  PolyMatrix pc(4, 4, Poly(3));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) pc(i, j) = Poly::constant(3, c(i, j));
  CHECK(poly_pfaffian(pc) == Poly::constant(3, pfaffian(c)));

  PolyMatrix two(2, 2, Poly(1));
  two(0, 1) = var(1, 0);
  two(1, 0) = -var(1, 0);
  CHECK(poly_pfaffian(two) == var(1, 0));

  PolyMatrix six(4, 4, Poly(6));
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      six(i, j) = var(6, k);
      six(j, i) = -var(6, k);
      ++k;
    }
  const Poly expected = var(6, 0) * var(6, 5) - var(6, 1) * var(6, 4) + var(6, 2) * var(6, 3);
  CHECK(poly_pfaffian(six) == expected);

  PolyMatrix zero(2, 2, Poly(2));
  CHECK(poly_pfaffian(zero).is_zero());
  CHECK(poly_pfaffian(zero).term_count() == 0);
  PolyMatrix odd(3, 3, Poly(1));
  CHECK_THROWS_AS(poly_pfaffian(odd), Error);
}

TEST_CASE("poly_diff examples") {
  const Poly x = var(2, 0), y = var(2, 1);
  CHECK(poly_diff(x * x * y, 0) == Rational(2) * x * y);
  CHECK(poly_diff(Poly::constant(2, q(7)), 1).is_zero());
  CHECK(poly_diff(x * x * x - Rational(3) * x * y * y, 0) == Rational(3) * x * x - Rational(3) * y * y);
}

TEST_CASE("parse_poly and printing") {
  const Poly p = parse_poly("2*x1^2*x2 - 3/4*x3 + 1", 3);
  const Poly x1 = var(3, 0), x2 = var(3, 1), x3 = var(3, 2);
  CHECK(p == Rational(2) * x1 * x1 * x2 - q(3, 4) * x3 + Poly::constant(3, q(1)));
  CHECK(parse_poly("(x1 + x2)^2", 2) == parse_poly("x1^2 + 2*x1*x2 + x2^2", 2));
  CHECK(parse_poly("-x1", 1) == -var(1, 0));
  CHECK(parse_poly(parse_poly("x1*x2 - 5/3", 2).to_string(), 2) == parse_poly("x1*x2 - 5/3", 2));
  CHECK(Poly(2).to_string() == "0");
  CHECK_THROWS_AS(parse_poly("x3", 2), Error);
  CHECK_THROWS_AS(parse_poly("x1 +", 2), Error);
  CHECK_THROWS_AS(parse_poly("(x1", 2), Error);
}

TEST_CASE("poly ring axioms on random polynomials") {
  Gen gen(15);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = gen.poly(3, 4, 3), b = gen.poly(3, 4, 3), c = gen.poly(3, 4, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly(3));
    const Poly ab = a * b;
    for (const auto& [e, coef] : ab.terms()) {
      CHECK(e.size() == 3);
      CHECK(sgn(coef) != 0);
    }
  }
}

TEST_CASE("poly_diff obeys the Leibniz rule") {
  Gen gen(16);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = gen.poly(3, 4, 3), b = gen.poly(3, 4, 3);
    const std::size_t v = gen.integer(0, 2);
    CHECK(poly_diff(a * b, v) == poly_diff(a, v) * b + a * poly_diff(b, v));
  }
}

TEST_CASE("poly evaluation matches term-wise oracle") {
  Gen gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = gen.poly(2, 5, 4), b = gen.poly(2, 5, 4);
    const std::vector<Rational> pt{gen.rational(), gen.rational()};
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    const std::vector<double> dpt{pt[0].get_d(), pt[1].get_d()};
    CHECK(a.evaluate(dpt) == doctest::Approx(a.evaluate(pt).get_d()));
  }
}
