#include <doctest.h>

#include "oracles.hpp"
#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"

using namespace pdalg;
using oracle::GR;

namespace {

Chart xyz() { return Chart::real({"x", "y", "z"}); }

std::vector<GR> random_point(SampleRng& rng, std::size_t n) {
  std::vector<GR> pt;
  for (std::size_t i = 0; i < n; ++i) pt.emplace_back(Rational(rng.uniform(-7, 7), rng.uniform(1, 5)),
                                                      Rational(rng.uniform(-3, 3), rng.uniform(1, 4)));
  return pt;
}

}  // namespace

TEST_CASE("gaussian rationals print and parse back") {
  for (const char* s : {"3", "-1/2", "i", "-2/3*i", "(1 + 2*i)", "(-1/2 - 5/7*i)"}) {
    GR g = GR::parse(s);
    CHECK(g.str() == s);
    CHECK(GR::parse(g.str()) == g);
  }
  CHECK(GR::parse("1/2+3/4*i") == GR(Rational(1, 2), Rational(3, 4)));
  CHECK(GR(Rational(1), Rational(1)) * GR(Rational(1), Rational(-1)) == GR(2));
  CHECK(GR(Rational(3), Rational(4)).norm() == 25);
  CHECK_THROWS_AS(GR(0).inverse(), DomainError);
}

TEST_CASE("polynomial arithmetic agrees with pointwise evaluation") {
  Chart c = xyz();
  SampleRng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    RatExpr p = random_polynomial(rng, c, 3, 4), q = random_polynomial(rng, c, 3, 3);
    auto pt = random_point(rng, 3);
    const GR vp = oracle::eval(p, pt), vq = oracle::eval(q, pt);
    CHECK(oracle::eval(p + q, pt) == vp + vq);
    CHECK(oracle::eval(p - q, pt) == vp - vq);
    CHECK(oracle::eval(p * q, pt) == vp * vq);
    CHECK(oracle::eval(p.pow(3), pt) == vp * vp * vp);
    if (!q.is_zero() && !vq.is_zero()) CHECK(oracle::eval(p / q, pt) == vp / vq);
  }
}

TEST_CASE("gcd divides both arguments and cancels common factors") {
  Chart c = xyz();
  SampleRng rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial g = random_polynomial(rng, c, 2, 3).numerator();
    Polynomial a = random_polynomial(rng, c, 2, 2).numerator(), b = random_polynomial(rng, c, 2, 2).numerator();
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial h = gcd(g * a, g * b);
    CHECK_NOTHROW((g * a).divide_exact(h));
    CHECK_NOTHROW((g * b).divide_exact(h));
    CHECK_NOTHROW(h.divide_exact(g.monic()));
    CHECK(RatExpr(g * a, g * b) == RatExpr(a, b));
  }
}

TEST_CASE("normal form has a monic denominator and no common factor") {
  Chart c = Chart::real({"x", "y"});
  RatExpr x = RatExpr::var(0), y = RatExpr::var(1);
  RatExpr e = (x * x - y * y) / (RatExpr(2) * x + RatExpr(2) * y);
  CHECK(e == (x - y) / RatExpr(2));
  CHECK(e.denominator().is_one());
  RatExpr f = RatExpr(1) / (RatExpr(3) * x + y);
  CHECK(to_string(f, c) == "1/3/(x + 1/3*y)");
  CHECK_THROWS_AS(RatExpr(1) / RatExpr(0), DomainError);
}

TEST_CASE("expressions print canonically and re-parse to the same value") {
  Chart c = xyz();
  SampleRng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    RatExpr p = random_polynomial(rng, c, 3, 4), q = random_polynomial(rng, c, 2, 2);
    RatExpr e = q.is_zero() ? p : p / q;
    CHECK(parse_expr(to_string(e, c), c) == e);
  }
  CHECK(to_string(parse_expr("(x+y)^2 - 2*x*y", c), c) == "x^2 + y^2");
  CHECK(parse_expr("x^-2", c) == RatExpr(1) / (RatExpr::var(0) * RatExpr::var(0)));
  CHECK_THROWS_AS(parse_expr("x + ", c), ParseError);
  CHECK_THROWS_AS(parse_expr("w", c), ParseError);
  CHECK_THROWS_AS(parse_expr("2 x", c), ParseError);
}

TEST_CASE("derivatives satisfy the product and quotient rules") {
  Chart c = xyz();
  SampleRng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    RatExpr p = random_polynomial(rng, c, 3, 3), q = random_polynomial(rng, c, 2, 3);
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK((p * q).diff(v) == p.diff(v) * q + p * q.diff(v));
      if (!q.is_zero()) CHECK((p / q).diff(v) == (p.diff(v) * q - p * q.diff(v)) / (q * q));
    }
  }
  RatExpr x = RatExpr::var(0);
  CHECK(x.pow(5).diff(0) == RatExpr(5) * x.pow(4));
}

TEST_CASE("substitution is evaluation after composition") {
  Chart c = Chart::real({"x", "y"});
  SampleRng rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    RatExpr p = random_polynomial(rng, c, 3, 4);
    RatExpr u = random_polynomial(rng, c, 2, 2), w = random_polynomial(rng, c, 2, 2);
    auto pt = random_point(rng, 2);
    RatExpr composed = p.subst({{0, u}, {1, w}});
    CHECK(oracle::eval(composed, pt) == oracle::eval(p, {oracle::eval(u, pt), oracle::eval(w, pt)}));
  }
}

TEST_CASE("conjugation swaps paired variables and conjugates coefficients") {
  Chart c = Chart::complex({"z", "zb"}, {{"z", "zb"}});
  RatExpr e = parse_expr("(1+2*i)*z^2*zb + i", c);
  CHECK(e.conjugated(c.conj_permutation()) == parse_expr("(1-2*i)*zb^2*z - i", c));
  CHECK(e.conjugated(c.conj_permutation()).conjugated(c.conj_permutation()) == e);
}
