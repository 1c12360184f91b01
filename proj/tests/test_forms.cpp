#include <doctest.h>

#include "oracles.hpp"
#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"

using namespace pdalg;

namespace {

Chart complex2() { return Chart::complex({"z", "w", "zb", "wb"}, {{"z", "zb"}, {"w", "wb"}}); }

DiffForm random_form(SampleRng& rng, const Chart& c, unsigned terms) {
  DiffForm f;
  for (unsigned k = 0; k < terms; ++k) f += random_monomial_form(rng, c, 2);
  return f;
}

int parity(const DiffForm& f) { return f.degree() % 2; }

}  // namespace

TEST_CASE("wedge matches the permutation-sign definition") {
  Chart c = Chart::real({"a", "b", "c", "e"});
  SampleRng rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    DiffForm f = random_form(rng, c, 3), g = random_form(rng, c, 3);
    CHECK(wedge(f, g) == oracle::wedge(f, g));
  }
}

TEST_CASE("wedge is graded commutative and associative") {
  Chart c = complex2();
  SampleRng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    DiffForm f = random_monomial_form(rng, c, 2), g = random_monomial_form(rng, c, 2),
             h = random_monomial_form(rng, c, 2);
    DiffForm fg = wedge(f, g);
    DiffForm gf = (parity(f) * parity(g)) % 2 ? -wedge(g, f) : wedge(g, f);
    CHECK(fg == gf);
    CHECK(wedge(wedge(f, g), h) == wedge(f, wedge(g, h)));
    if (!fg.is_zero()) CHECK(fg.degree() == f.degree() + g.degree());
  }
  CHECK(wedge(DiffForm::dx(0), DiffForm::dx(0)).is_zero());
}

TEST_CASE("d, delta and delta-bar square to zero and anticommute") {
  Chart c = complex2();
  SampleRng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    DiffForm f = random_form(rng, c, 2);
    DiffForm dh = ext_d(f, c, DerivativeMode::holo), da = ext_d(f, c, DerivativeMode::antiholo);
    CHECK(ext_d(ext_d(f, c), c).is_zero());
    CHECK(ext_d(dh, c, DerivativeMode::holo).is_zero());
    CHECK(ext_d(da, c, DerivativeMode::antiholo).is_zero());
    CHECK((ext_d(dh, c, DerivativeMode::antiholo) + ext_d(da, c, DerivativeMode::holo)).is_zero());
    CHECK(ext_d(f, c) == dh + da);
  }
}

TEST_CASE("d follows the graded Leibniz rule") {
  Chart c = Chart::real({"x", "y", "z"});
  SampleRng rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    DiffForm f = random_monomial_form(rng, c, 2), g = random_monomial_form(rng, c, 2);
    DiffForm rhs = wedge(ext_d(f, c), g);
    rhs += parity(f) ? -wedge(f, ext_d(g, c)) : wedge(f, ext_d(g, c));
    CHECK(ext_d(wedge(f, g), c) == rhs);
  }
}

TEST_CASE("d of a function is its gradient") {
  Chart c = Chart::real({"x", "y"});
  RatExpr f = parse_expr("x^2*y + 3*y", c);
  CHECK(ext_d(DiffForm(f), c) == parse_form("2*x*y*d[x] + (x^2 + 3)*d[y]", c));
}

TEST_CASE("star conjugates, swaps types and reverses factors") {
  Chart c = Chart::complex({"z", "zb"}, {{"z", "zb"}});
  CHECK(star(parse_form("z*d[z]", c), c) == parse_form("zb*d[zb]", c));
  CHECK(star(DiffForm(RatExpr(GaussianRational::i())), c) == DiffForm(RatExpr(-GaussianRational::i())));
  // (dz ^ dzb)* = (dzb)* ^ (dz)* = dz ^ dzb
  CHECK(star(parse_form("d[z]^d[zb]", c), c) == parse_form("d[z]^d[zb]", c));
  CHECK_THROWS_AS(star(DiffForm(RatExpr(1)), Chart::real({"x"})), DomainError);
}

TEST_CASE("star is an involutive antihomomorphism") {
  Chart c = complex2();
  SampleRng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    DiffForm f = random_form(rng, c, 2), g = random_form(rng, c, 2);
    CHECK(star(star(f, c), c) == f);
    CHECK(star(wedge(f, g), c) == wedge(star(g, c), star(f, c)));
  }
}

TEST_CASE("bidegree counts holomorphic and antiholomorphic factors") {
  Chart c = complex2();
  CHECK(bidegree(mask_of({0, 2, 3}), c) == std::make_pair(1u, 2u));
  CHECK(bidegree(mask_of({0, 1}), c) == std::make_pair(2u, 0u));
}

TEST_CASE("forms print and re-parse to the same value") {
  Chart c = complex2();
  SampleRng rng(6);
  for (int trial = 0; trial < 25; ++trial) {
    DiffForm f = random_form(rng, c, 3);
    CHECK(parse_form(to_string(f, c), c) == f);
  }
  CHECK(to_string(parse_form("d[w]^d[z]", c), c) == "-d[z] ^ d[w]");
  CHECK_THROWS_AS(parse_form("d[q]", c), ParseError);
}

TEST_CASE("inhomogeneous forms split by degree") {
  Chart c = Chart::real({"x", "y"});
  DiffForm f = parse_form("x + d[x] + y*d[x]^d[y]", c);
  auto parts = f.homogeneous_parts();
  CHECK(parts.size() == 3);
  CHECK(parts.at(1) == DiffForm::dx(0));
  CHECK_THROWS_AS(f.degree(), DomainError);
}
