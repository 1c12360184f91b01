#include "pdalg/one_dim.hpp"

#include <sstream>

#include "pdalg/errors.hpp"

namespace pdalg {

namespace {

using GR = GaussianRational;

constexpr std::size_t kZ = 0;
constexpr std::size_t kZb = 1;

RatExpr z() { return RatExpr::var(kZ); }
RatExpr zb() { return RatExpr::var(kZb); }

}  // namespace

std::string to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::plane:
      return "plane";
    case SurfaceClass::sphere:
      return "sphere";
    case SurfaceClass::lobachevskian:
      return "lobachevskian";
  }
  return "";
}

Chart one_dim_chart() { return Chart::complex({"z", "zb"}, {{"z", "zb"}}); }

RatExpr one_dim_P(const HermitianTriple& t) {
  return RatExpr(GR(t.a)) * z() * zb() + RatExpr(t.b) * z() + RatExpr(t.b.conj()) * zb() + RatExpr(GR(t.c));
}

PoissonStructure build_one_dim(const HermitianTriple& t) {
  if (t.is_zero()) throw DomainError("P is identically zero");
  const Chart chart = one_dim_chart();
  const RatExpr P = one_dim_P(t);
  const RatExpr S = P.diff(kZb);
  ExprMatrix Pm(2, 2);
  Pm(kZ, kZb) = P;
  Pm(kZb, kZ) = -P;
  // (zb, dzb) is the conjugate of (z, dz); the mixed brackets follow from
  // d(z, zb) = (dz, zb) + (z, dzb) with each side of fixed type.
  std::vector<std::vector<DiffForm>> q(2, std::vector<DiffForm>(2));
  q[kZ][kZ] = DiffForm::dx(kZ) * S;
  q[kZ][kZb] = DiffForm::dx(kZb) * P.diff(kZb);
  q[kZb][kZ] = -(DiffForm::dx(kZ) * P.diff(kZ));
  q[kZb][kZb] = -(DiffForm::dx(kZb) * S.conjugated(chart.conj_permutation()));
  return structure_from_brackets(chart, Pm, q);
}

CanonicalConstants one_dim_constants(const HermitianTriple& t) {
  CanonicalConstants c(2);
  c.set_Rt(kZ, kZb, kZ, kZb, GR(t.a));
  c.set_f(kZ, kZb, kZ, t.b);
  c.set_f(kZ, kZb, kZb, t.b.conj());
  c.set_g(kZ, kZb, GR(t.c));
  return c;
}

Frame one_dim_frame(const HermitianTriple& t) {
  const PoissonStructure s = build_one_dim(t);
  return Frame{s.P(), s.require_P_inverse(), {z(), zb()}};
}

HermitianTriple moebius(const HermitianTriple& t, const MoebiusMap& m) {
  if (m.determinant().is_zero()) throw DomainError("degenerate Moebius map");
  ScalarMatrix L(2, 2), H(2, 2), R(2, 2);
  L(0, 0) = m.alpha;
  L(0, 1) = m.gamma;
  L(1, 0) = m.beta;
  L(1, 1) = m.delta;
  H(0, 0) = GR(t.a);
  H(0, 1) = t.b;
  H(1, 0) = t.b.conj();
  H(1, 1) = GR(t.c);
  R(0, 0) = m.alpha.conj();
  R(0, 1) = m.beta.conj();
  R(1, 0) = m.gamma.conj();
  R(1, 1) = m.delta.conj();
  const ScalarMatrix out = L * H * R;
  return {out(0, 0).re(), out(0, 1), out(1, 1).re()};
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& s) {
  return {f.alpha * s.alpha + f.beta * s.gamma, f.alpha * s.beta + f.beta * s.delta,
          f.gamma * s.alpha + f.delta * s.gamma, f.gamma * s.beta + f.delta * s.delta};
}

RatExpr moebius_metric(const HermitianTriple& t, const MoebiusMap& m) {
  const HermitianTriple p = moebius(t, m);
  return RatExpr(GR(m.determinant().norm())) / one_dim_P(p).pow(2);
}

MoebiusMap diagonalizing_map(const HermitianTriple& t) {
  if (t.is_zero()) throw DomainError("zero triple");
  if (t.b.is_zero()) return {};
  auto translate = [](const HermitianTriple& u) {
    // z = z' - conj(b)/a removes b when a != 0.
    return MoebiusMap{GR(1), -(u.b.conj() / GR(u.a)), GR(0), GR(1)};
  };
  if (sgn(t.a) != 0) return translate(t);
  MoebiusMap first = sgn(t.c) != 0 ? MoebiusMap{GR(0), GR(1), GR(1), GR(0)} : MoebiusMap{GR(1), GR(0), t.b, GR(1)};
  return compose(first, translate(moebius(t, first)));
}

SurfaceClass classify(const HermitianTriple& t) {
  if (t.is_zero()) throw DomainError("zero triple");
  const int s = sgn(t.determinant());
  return s == 0 ? SurfaceClass::plane : s > 0 ? SurfaceClass::sphere : SurfaceClass::lobachevskian;
}

SurfaceClass classify_by_diagonalization(const HermitianTriple& t) {
  const HermitianTriple d = moebius(t, diagonalizing_map(t));
  if (!d.b.is_zero()) throw DomainError("diagonalization failed");
  if (sgn(d.a) == 0 || sgn(d.c) == 0) return SurfaceClass::plane;
  return sgn(d.a) == sgn(d.c) ? SurfaceClass::sphere : SurfaceClass::lobachevskian;
}

RatExpr gaussian_curvature(const HermitianTriple& t) {
  if (t.is_zero()) throw DomainError("degenerate metric");
  const RatExpr h = one_dim_P(t).pow(-2);
  // ∂∂̄ log h = (h ∂∂̄h - ∂h ∂̄h) / h^2.
  const RatExpr ddbar_log = (h * h.diff(kZ).diff(kZb) - h.diff(kZ) * h.diff(kZb)) / (h * h);
  return -(ddbar_log / h);
}

HermitianTriple parse_triple(const std::string& a, const std::string& b, const std::string& c) {
  const GR ga = GR::parse(a), gc = GR::parse(c);
  if (!ga.is_real() || !gc.is_real()) throw DomainError("a and c must be real");
  return {ga.re(), GR::parse(b), gc.re()};
}

MoebiusMap parse_moebius(const std::string& text) {
  std::vector<GR> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(GR::parse(item));
  if (parts.size() != 4) throw ParseError("expected alpha,beta,gamma,delta", 0);
  return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace pdalg
