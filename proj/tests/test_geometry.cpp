#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pdalg/complex_pda.hpp"
#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"

using namespace pdalg;

namespace {

/// x^i = x'^i + a (x'^j)^2, other coordinates unchanged.
CoordinateChange shear(std::size_t i, std::size_t j, const RatExpr& a, std::size_t n) {
  CoordinateChange c;
  for (std::size_t k = 0; k < n; ++k) {
    c.old_of_new[k] = RatExpr::var(k);
    c.new_of_old[k] = RatExpr::var(k);
  }
  c.old_of_new[i] = RatExpr::var(i) + a * RatExpr::var(j).pow(2);
  c.new_of_old[i] = RatExpr::var(i) - a * RatExpr::var(j).pow(2);
  return c;
}

}  // namespace

TEST_CASE("curvature and torsion match the textbook formulas") {
  Chart c = Chart::real({"x", "y", "z"});
  SampleRng rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    Connection G = oracle::random_connection(rng, c, 2);
    Tensor R = curvature(G), T = torsion(G);
    for_each_index(3, 4, [&](const Tensor::Index& i) {
      CHECK(R(i) == oracle::curvature(G, i[0], i[1], i[2], i[3]));
    });
    for_each_index(3, 3, [&](const Tensor::Index& i) { CHECK(T(i) == oracle::torsion(G, i[0], i[1], i[2])); });
    // Γ̃ is Γ with its lower indices exchanged.
    Tensor Rt = curvature(G, ConnectionKind::gamma_tilde);
    Connection Gt = transposed(G);
    for_each_index(3, 4, [&](const Tensor::Index& i) {
      CHECK(Rt(i) == oracle::curvature(Gt, i[0], i[1], i[2], i[3]));
    });
  }
}

TEST_CASE("covariant derivative of a vector field") {
  Chart c = Chart::real({"x", "y"});
  SampleRng rng(32);
  Connection G = oracle::random_connection(rng, c, 1);
  Tensor U(2, {up()});
  U({0}) = random_polynomial(rng, c, 2, 2);
  U({1}) = random_polynomial(rng, c, 2, 2);
  Tensor D = covariant_derivative(U, G);
  Tensor Dt = covariant_derivative(U, G, ConnectionKind::gamma_tilde);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t d = 0; d < 2; ++d) {
      RatExpr want = U({a}).diff(d), want_t = U({a}).diff(d);
      for (std::size_t m = 0; m < 2; ++m) {
        want += G(a, d, m) * U({m});
        want_t += G(a, m, d) * U({m});
      }
      CHECK(D({a, d}) == want);
      CHECK(Dt({a, d}) == want_t);
    }
}

TEST_CASE("the two curvature identities hold for arbitrary connections") {
  for (std::size_t n : {2, 3}) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("x" + std::to_string(k));
    Chart c = Chart::real(names);
    SampleRng rng(33 + n);
    for (int trial = 0; trial < 4; ++trial) {
      Connection G = oracle::random_connection(rng, c, 2);
      CHECK(first_identity_residual(G).is_zero());
      CHECK(second_identity_residual(G).is_zero());
    }
  }
}

TEST_CASE("integrability of the canonical fixtures") {
  for (const auto& k : {fixture::darboux_constants(1), fixture::darboux_constants(2), fixture::rt_dim2(),
                        fixture::f_dim2(), fixture::rt_f_dim2()}) {
    VerificationReport r = check_integrability(build_canonical(k).structure);
    for (const auto& e : r.sorted()) {
      INFO(e.name << " " << e.location << " " << e.residual_text);
      CHECK(e.status == CheckStatus::pass);
    }
  }
}

TEST_CASE("a corrupted connection fails integrability") {
  PoissonStructure s = build_canonical(fixture::rt_dim2()).structure;
  Connection G = s.gamma();
  G(0, 0, 1) += RatExpr::var(1);
  VerificationReport r = check_integrability(PoissonStructure(s.chart(), s.P(), G));
  CHECK_FALSE(r.passed());
  CHECK(r.get("integrability.nabla-tilde-P").status == CheckStatus::fail);
}

TEST_CASE("a Jacobi-violating P is caught even when singular") {
  PoissonStructure s = canonical_bracket_only(fixture::bad_cybe_dim3(), canonical_chart(3));
  VerificationReport r = check_integrability(s);
  CHECK(r.get("integrability.jacobi-P").status == CheckStatus::fail);
  CHECK(r.get("integrability.curvature").status == CheckStatus::not_applicable);
}

TEST_CASE("coordinate changes commute with torsion and curvature") {
  Chart c = Chart::real({"x", "y", "z"});
  SampleRng rng(34);
  std::vector<CoordinateChange> changes = {shear(0, 1, RatExpr(1), 3), shear(1, 2, RatExpr(-2), 3),
                                           shear(2, 0, RatExpr(1) / RatExpr(3), 3)};
  for (const auto& ch : changes) {
    CHECK_NOTHROW(validate(ch, 3));
    Connection G = oracle::random_connection(rng, c, 1);
    Connection Gp = transform_connection(G, ch);
    CHECK(transform_tensor(torsion(G), ch) == torsion(Gp));
    CHECK(transform_tensor(curvature(G), ch) == curvature(Gp));
  }
  CoordinateChange broken = shear(0, 1, RatExpr(1), 3);
  broken.new_of_old[0] = RatExpr::var(0);
  CHECK_THROWS_AS(validate(broken, 3), DomainError);
}

TEST_CASE("transformed structures keep their brackets") {
  PoissonStructure s = build_canonical(fixture::rt_dim2()).structure;
  CoordinateChange ch = shear(1, 0, RatExpr(1), 2);
  PoissonStructure sp = transform_structure(s, ch);
  // (x'^a, x'^b) computed in the old chart, then pulled back.
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      RatExpr old = s.bracket(ch.new_of_old.at(a), ch.new_of_old.at(b));
      CHECK(old.subst(ch.old_of_new) == sp.P(a, b));
    }
  CHECK(check_integrability(sp).passed());
}

TEST_CASE("connection from a constant frame metric reproduces Γ") {
  for (const auto& k : {fixture::darboux_constants(1), fixture::rt_dim2(), fixture::rt_f_dim2()}) {
    CanonicalBuild b = build_canonical(k);
    ExprMatrix h = coordinate_metric(b.frame, ScalarMatrix::identity(2));
    Metric m(h);
    Connection G = connection_from_metric(m, b.structure.P());
    CHECK(G == b.structure.gamma());
    CHECK(covariant_derivative(m.tensor(), G).is_zero());
    CHECK(covariant_derivative(poisson_tensor(b.structure), G, ConnectionKind::gamma_tilde).is_zero());
  }
}

TEST_CASE("metrics must be symmetric and invertible") {
  ExprMatrix h(2, 2);
  h(0, 1) = RatExpr(1);
  CHECK_THROWS_AS(Metric{h}, DomainError);
  h(0, 0) = h(1, 0) = h(1, 1) = RatExpr(1);
  CHECK_THROWS_AS(Metric{h}, DomainError);
}

TEST_CASE("one-dimensional connections are block diagonal") {
  for (const auto& t : fixture::one_dim_triples()) {
    PoissonStructure s = build_one_dim(t);
    CHECK(check_block_diagonal(s).status == CheckStatus::pass);
    VerificationReport r = check_integrability(s);
    CHECK(r.passed());
  }
}
