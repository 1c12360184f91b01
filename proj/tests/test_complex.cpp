#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pdalg/complex_pda.hpp"
#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"

using namespace pdalg;

namespace {

std::vector<HermitianTriple> diagonal_triples() {
  return {fixture::triple(1, 0, 1), fixture::triple(1, 0, -1), fixture::triple(3, 0, 2), fixture::triple(0, 0, 1)};
}

DiffForm dz_dzb() { return wedge(DiffForm::dx(0), DiffForm::dx(1)); }

}  // namespace

TEST_CASE("the one-dimensional frame splits by type") {
  HermitianTriple t = fixture::triple(1, 0, 1);
  FrameSplit sp = split_frame(build_one_dim(t), one_dim_frame(t));
  CHECK(sp.unbarred == std::vector<bool>{false, true});
  REQUIRE(sp.conj[0].has_value());
  CHECK(*sp.conj[0] == 1);
  CHECK(*sp.conj[1] == 0);
}

TEST_CASE("a frame mixing types is rejected") {
  HermitianTriple t = fixture::triple(1, 0, 1);
  Frame fr = one_dim_frame(t);
  fr.Minv(0, 0) = RatExpr(1);
  CHECK_THROWS_AS(split_frame(build_one_dim(t), fr), DomainError);
}

TEST_CASE("complex axioms other than hermiticity pass on every fixture") {
  for (const auto& t : fixture::one_dim_triples()) {
    PoissonStructure s = build_one_dim(t);
    Frame fr = one_dim_frame(t);
    CanonicalConstants c = one_dim_constants(t);
    VerificationReport r = verify_complex_axioms(s, {}, &fr, &c);
    for (const auto& e : r.sorted()) {
      if (e.name == "axioms.hermiticity") continue;
      INFO(e.name << " " << e.location << " " << e.residual_text);
      CHECK(e.status == CheckStatus::pass);
    }
    CHECK(r.has("complex.Rt-pattern"));
    CHECK(r.has("integrability.block-diagonal"));
  }
  CHECK_THROWS_AS(verify_complex_axioms(oracle::darboux(1)), DomainError);
}

TEST_CASE("a connection with a mixed component fails block-diagonality") {
  PoissonStructure s = build_one_dim(fixture::triple(1, 0, 1));
  Connection G = s.gamma();
  G(0, 0, 1) += RatExpr(1);
  CHECK(check_block_diagonal(PoissonStructure(s.chart(), s.P(), G)).status == CheckStatus::fail);
}

TEST_CASE("eta realizes the holomorphic differential") {
  for (const auto& t : diagonal_triples()) {
    PoissonStructure s = build_one_dim(t);
    EtaResult e = eta_forms(s, one_dim_frame(t), one_dim_constants(t));
    const Chart& c = s.chart();
    CHECK(e.eta == parse_form("-zb/(" + to_string(one_dim_P(t), c) + ")*d[z]", c));
    CHECK(e.report.passed());
    CHECK(e.report.get("eta.realization").status == CheckStatus::pass);
    // Spot check against δ directly.
    DiffForm w = parse_form("z^2*zb*d[zb]", c);
    CHECK(s.bracket(e.eta, w) == ext_d(w, c, DerivativeMode::holo));
  }
}

TEST_CASE("eta realization is not claimed when b ≠ 0") {
  HermitianTriple t = fixture::triple(2, GaussianRational(1, 3), -1);
  EtaResult e = eta_forms(build_one_dim(t), one_dim_frame(t), one_dim_constants(t));
  CHECK(e.report.get("eta.realization").status == CheckStatus::not_applicable);
  CHECK(e.report.passed());
}

TEST_CASE("K = δ̄η is central and closed") {
  for (const auto& t : diagonal_triples()) {
    PoissonStructure s = build_one_dim(t);
    KahlerResult k = kahler_form(s, one_dim_frame(t), one_dim_constants(t));
    RatExpr P = one_dim_P(t);
    CHECK(k.K == RatExpr(GaussianRational(t.c)) / (P * P) * dz_dzb());
    CHECK(k.report.passed());
  }
}

TEST_CASE("dz dzb / P^2 commutes with the generators") {
  for (const auto& t : fixture::one_dim_triples()) {
    PoissonStructure s = build_one_dim(t);
    RatExpr P = one_dim_P(t);
    DiffForm K = RatExpr(1) / (P * P) * dz_dzb();
    for (const auto& g : generators(s.chart())) {
      CHECK(s.bracket(K, g).is_zero());
      CHECK(s.bracket(g, K).is_zero());
    }
  }
}

TEST_CASE("Kähler form from an explicit hermitian frame metric") {
  HermitianTriple t = fixture::triple(1, 0, -1);
  PoissonStructure s = build_one_dim(t);
  Frame fr = one_dim_frame(t);
  ScalarMatrix h = ScalarMatrix::identity(1);
  KahlerResult k = kahler_form(s, fr, one_dim_constants(t), h);
  auto e = frame_forms(fr);
  CHECK(k.K == wedge(e[1], e[0]));
  CHECK(k.report.passed());
  ScalarMatrix bad(1, 1);
  bad(0, 0) = GaussianRational::i();
  CHECK_THROWS_AS(kahler_form(s, fr, one_dim_constants(t), bad), DomainError);
}

TEST_CASE("the default Kähler form needs f = 0") {
  HermitianTriple t = fixture::triple(0, 1, 0);
  CHECK_THROWS_AS(kahler_form(build_one_dim(t), one_dim_frame(t), one_dim_constants(t)), DomainError);
}
