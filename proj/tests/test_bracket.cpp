#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pdalg/axioms.hpp"
#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"

using namespace pdalg;

namespace {

void require_all_pass(const VerificationReport& r) {
  for (const auto& e : r.sorted()) {
    INFO(e.name << " at " << e.location << ": " << e.residual_text);
    CHECK(e.status != CheckStatus::fail);
  }
}

}  // namespace

TEST_CASE("Darboux brackets of generators") {
  PoissonStructure s = oracle::darboux(1);
  const Chart& c = s.chart();
  auto F = [&](const char* t) { return parse_form(t, c); };
  CHECK(s.bracket(F("q1"), F("p1")) == DiffForm(1));
  CHECK(s.bracket(F("q1"), F("d[p1]")).is_zero());
  CHECK(s.bracket(F("d[q1]"), F("d[p1]")).is_zero());
  CHECK(s.bracket(F("p1"), F("q1")) == DiffForm(-1));
}

TEST_CASE("function brackets agree with P^{ab} ∂_a f ∂_b g") {
  SampleRng rng(21);
  for (const auto& c : {fixture::rt_dim2(), fixture::f_dim2(), fixture::darboux_constants(2)}) {
    PoissonStructure s = build_canonical(c).structure;
    for (int trial = 0; trial < 10; ++trial) {
      RatExpr f = random_polynomial(rng, s.chart(), 3, 3), g = random_polynomial(rng, s.chart(), 3, 3);
      CHECK(s.bracket(f, g) == oracle::function_bracket(s.P(), f, g));
    }
  }
}

TEST_CASE("one-dimensional brackets with dz") {
  for (const auto& t : fixture::one_dim_triples()) {
    PoissonStructure s = build_one_dim(t);
    const Chart& c = s.chart();
    RatExpr z = RatExpr::var(0);
    RatExpr S = RatExpr(GaussianRational(t.a)) * z + RatExpr(t.b.conj());
    CHECK(s.bracket(parse_form("z", c), parse_form("d[z]", c)) == S * DiffForm::dx(0));
    CHECK(s.bracket(parse_form("d[z]", c), parse_form("d[zb]", c)) ==
          RatExpr(GaussianRational(t.a)) * wedge(DiffForm::dx(0), DiffForm::dx(1)));
    CHECK(s.bracket(parse_form("z", c), parse_form("zb", c)) == DiffForm(one_dim_P(t)));
  }
}

TEST_CASE("bracket is a graded derivation in the second argument") {
  PoissonStructure s = build_canonical(fixture::rt_f_dim2()).structure;
  SampleRng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    DiffForm f = random_monomial_form(rng, s.chart(), 2), g = random_monomial_form(rng, s.chart(), 2),
             h = random_monomial_form(rng, s.chart(), 2);
    CHECK(derivation_residual(s, f, g, h).is_zero());
    CHECK(symmetry_residual(s, f, g).is_zero());
    CHECK(leibniz_residual(s, f, g).is_zero());
  }
}

TEST_CASE("polynomial data gives polynomial brackets") {
  PoissonStructure s = oracle::darboux(2);
  SampleRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    DiffForm f = random_monomial_form(rng, s.chart(), 2), g = random_monomial_form(rng, s.chart(), 2);
    CHECK(s.bracket(f, g).has_polynomial_coefficients());
  }
}

TEST_CASE("Darboux structures in dims 2 and 4 satisfy every axiom") {
  for (std::size_t k : {1, 2}) {
    VerificationReport r = verify_axioms(oracle::darboux(k));
    require_all_pass(r);
    CHECK(r.get("axioms.jacobi[samples]").cases == 25);
  }
}

TEST_CASE("a corrupted connection breaks Jacobi on a generator triple") {
  PoissonStructure good = build_canonical(fixture::rt_dim2()).structure;
  Connection G = good.gamma();
  G(1, 1, 1) += RatExpr(1);
  PoissonStructure bad(good.chart(), good.P(), G);
  VerificationReport r = verify_axioms(bad);
  CHECK_FALSE(r.passed());

  bool generator_failure = false;
  for (const auto& name : {"axioms.jacobi[x,x,dx]", "axioms.jacobi[x,dx,dx]", "axioms.jacobi[dx,dx,dx]"}) {
    const CheckEntry& e = r.get(name);
    if (e.status != CheckStatus::fail) continue;
    generator_failure = true;
    CHECK_FALSE(e.residual.is_zero());
    // The witness names its inputs; recomputing the residual from them gives it back.
    std::string loc = e.location.substr(1, e.location.size() - 2);
    std::vector<DiffForm> args;
    std::size_t start = 0;
    while (start <= loc.size()) {
      std::size_t comma = loc.find(", ", start);
      args.push_back(parse_form(loc.substr(start, comma - start), bad.chart()));
      if (comma == std::string::npos) break;
      start = comma + 2;
    }
    REQUIRE(args.size() == 3);
    CHECK(jacobi_residual(bad, args[0], args[1], args[2]) == e.residual);
  }
  CHECK(generator_failure);
}

TEST_CASE("brackets reject forms from another chart") {
  PoissonStructure s = oracle::darboux(1);
  DiffForm outside = DiffForm::dx(3);
  CHECK_THROWS_AS(s.bracket(outside, DiffForm(1)), DomainError);
}

TEST_CASE("P must be antisymmetric") {
  Chart c = Chart::real({"x", "y"});
  ExprMatrix P(2, 2);
  P(0, 1) = RatExpr(1);
  P(1, 0) = RatExpr(1);
  CHECK_THROWS_AS(PoissonStructure(c, P), DomainError);
}

TEST_CASE("hermiticity holds whenever one argument is even") {
  for (const auto& t : fixture::one_dim_triples()) {
    PoissonStructure s = build_one_dim(t);
    SampleRng rng(24);
    for (int trial = 0; trial < 30; ++trial) {
      DiffForm f = random_monomial_form(rng, s.chart(), 2), g = random_monomial_form(rng, s.chart(), 2);
      if (f.is_zero() || g.is_zero() || (f.degree() % 2 == 1 && g.degree() % 2 == 1)) continue;
      CHECK(hermiticity_residual(s, f, g).is_zero());
    }
  }
}

TEST_CASE("complex Leibniz rules and bidegree hold on the one-dimensional structures") {
  for (const auto& t : fixture::one_dim_triples()) {
    VerificationReport r = verify_axioms(build_one_dim(t));
    for (const auto& name : {"axioms.leibniz-delta", "axioms.leibniz-deltabar", "axioms.bidegree", "axioms.symmetry",
                             "axioms.jacobi[samples]", "axioms.jacobi[dx,dx,dx]", "axioms.derivation"})
      CHECK(r.get(name).status == CheckStatus::pass);
  }
}
