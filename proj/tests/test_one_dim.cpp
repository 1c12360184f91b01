#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"
#include "pdalg/geometry.hpp"

using namespace pdalg;
using oracle::GR;

namespace {

HermitianTriple random_triple(SampleRng& rng) {
  return {Rational(rng.uniform(-3, 3)), GR(Rational(rng.uniform(-3, 3)), Rational(rng.uniform(-3, 3))),
          Rational(rng.uniform(-3, 3))};
}

MoebiusMap random_map(SampleRng& rng) {
  while (true) {
    auto g = [&] { return GR(Rational(rng.uniform(-3, 3)), Rational(rng.uniform(-2, 2))); };
    MoebiusMap m{g(), g(), g(), g()};
    if (!m.determinant().is_zero()) return m;
  }
}

RatExpr conj(const RatExpr& e) { return e.conjugated(one_dim_chart().conj_permutation()); }

/// P(z(z')) |γ z' + δ|^2 by substitution.
RatExpr pulled_back_P(const HermitianTriple& t, const MoebiusMap& m) {
  RatExpr z = RatExpr::var(0);
  RatExpr num = RatExpr(m.alpha) * z + RatExpr(m.beta), den = RatExpr(m.gamma) * z + RatExpr(m.delta);
  RatExpr image = num / den;
  RatExpr P = one_dim_P(t).subst({{0, image}, {1, conj(image)}});
  return P * den * conj(den);
}

/// -h^{-1} ∂∂̄ log h for h = P^{-2} equals 2 (P ∂∂̄P - ∂P ∂̄P).
RatExpr curvature_oracle(const HermitianTriple& t) {
  RatExpr P = one_dim_P(t);
  return RatExpr(2) * (P * P.diff(0).diff(1) - P.diff(0) * P.diff(1));
}

}  // namespace

TEST_CASE("classification by the determinant sign") {
  CHECK(classify(fixture::triple(1, 0, 1)) == SurfaceClass::sphere);
  CHECK(classify(fixture::triple(1, 0, -1)) == SurfaceClass::lobachevskian);
  CHECK(classify(fixture::triple(-2, 0, -5)) == SurfaceClass::sphere);
  CHECK(classify(fixture::triple(0, 0, 1)) == SurfaceClass::plane);
  CHECK(classify(fixture::triple(1, 1, 1)) == SurfaceClass::plane);
  CHECK(classify(fixture::triple(0, 1, 0)) == SurfaceClass::lobachevskian);
  CHECK_THROWS_AS(classify(fixture::triple(0, 0, 0)), DomainError);
  CHECK(to_string(SurfaceClass::lobachevskian) == "lobachevskian");
}

TEST_CASE("diagonalization agrees with the determinant") {
  SampleRng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    HermitianTriple t = random_triple(rng);
    if (t.is_zero()) continue;
    HermitianTriple d = moebius(t, diagonalizing_map(t));
    CHECK(d.b.is_zero());
    CHECK(classify_by_diagonalization(t) == classify(t));
  }
}

TEST_CASE("Möbius congruence matches substitution") {
  SampleRng rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    HermitianTriple t = random_triple(rng);
    if (t.is_zero()) continue;
    MoebiusMap m = random_map(rng);
    CHECK(one_dim_P(moebius(t, m)) == pulled_back_P(t, m));
  }
}

TEST_CASE("Möbius maps compose") {
  SampleRng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    HermitianTriple t = random_triple(rng);
    MoebiusMap f = random_map(rng), g = random_map(rng);
    CHECK(moebius(moebius(t, f), g) == moebius(t, compose(f, g)));
  }
  CHECK_THROWS_AS(moebius(fixture::triple(1, 0, 1), MoebiusMap{1, 2, 2, 4}), DomainError);
}

TEST_CASE("transformed metric is the pullback of P^{-2} dz dzb") {
  SampleRng rng(44);
  for (int trial = 0; trial < 8; ++trial) {
    HermitianTriple t = random_triple(rng);
    if (t.is_zero()) continue;
    MoebiusMap m = random_map(rng);
    // h'(z') = h(z(z')) |dz/dz'|^2 with dz/dz' = det / (γ z' + δ)^2.
    RatExpr z = RatExpr::var(0);
    RatExpr den = RatExpr(m.gamma) * z + RatExpr(m.delta);
    RatExpr image = (RatExpr(m.alpha) * z + RatExpr(m.beta)) / den;
    RatExpr P = one_dim_P(t).subst({{0, image}, {1, conj(image)}});
    RatExpr jac = RatExpr(m.determinant()) / (den * den);
    CHECK(moebius_metric(t, m) == jac * conj(jac) / (P * P));
  }
}

TEST_CASE("Gaussian curvature is the constant 2(ac - |b|^2)") {
  SampleRng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    HermitianTriple t = random_triple(rng);
    if (t.is_zero()) continue;
    RatExpr k = gaussian_curvature(t);
    CHECK(k == curvature_oracle(t));
    REQUIRE(k.is_constant());
    CHECK(k.constant_value() == GR(Rational(2) * t.determinant()));
  }
  CHECK(gaussian_curvature(fixture::triple(0, 0, 1)).is_zero());
  CHECK(gaussian_curvature(fixture::triple(0, 2, 5)) == RatExpr(-8));
}

TEST_CASE("class and curvature sign survive congruences") {
  SampleRng rng(46);
  for (const auto& t : fixture::one_dim_triples()) {
    const auto cls = classify(t);
    for (int k = 0; k < 10; ++k) {
      HermitianTriple u = moebius(t, random_map(rng));
      CHECK(classify(u) == cls);
      CHECK(sgn(gaussian_curvature(u).constant_value().re()) == sgn(gaussian_curvature(t).constant_value().re()));
    }
  }
}

TEST_CASE("the built structure matches its canonical description") {
  for (const auto& t : fixture::one_dim_triples()) {
    PoissonStructure s = build_one_dim(t);
    CanonicalBuild b = build_canonical(one_dim_constants(t), one_dim_chart());
    CHECK(b.structure.P() == s.P());
    CHECK(b.structure.gamma() == s.gamma());
    // Γ^a_{xy} vanishes unless y = a.
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t x = 0; x < 2; ++x) CHECK(s.gamma(a, x, 1 - a).is_zero());
  }
  CHECK_THROWS_AS(build_one_dim(fixture::triple(0, 0, 0)), DomainError);
}

TEST_CASE("the metric P^{-2} dz dzb determines the connection") {
  for (const auto& t : fixture::one_dim_triples()) {
    PoissonStructure s = build_one_dim(t);
    RatExpr P = one_dim_P(t);
    ExprMatrix h(2, 2);
    h(0, 1) = h(1, 0) = RatExpr(1) / (P * P);
    Metric m(h);
    Connection G = connection_from_metric(m, s.P());
    CHECK(G == s.gamma());
    CHECK(covariant_derivative(m.tensor(), G).is_zero());
    CHECK(covariant_derivative(poisson_tensor(s), G, ConnectionKind::gamma_tilde).is_zero());
  }
}

TEST_CASE("triple and map parsing") {
  HermitianTriple t = parse_triple("1", "1/2+3/4*i", "-2");
  CHECK(t == HermitianTriple{Rational(1), GR(Rational(1, 2), Rational(3, 4)), Rational(-2)});
  CHECK_THROWS_AS(parse_triple("i", "0", "1"), DomainError);
  CHECK(parse_moebius("1,0,i,1") == MoebiusMap{1, 0, GR::i(), 1});
  CHECK_THROWS_AS(parse_moebius("1,2,3"), ParseError);
}
