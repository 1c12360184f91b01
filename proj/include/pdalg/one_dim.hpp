#pragma once

#include <string>

#include "pdalg/canonical.hpp"
#include "pdalg/structure.hpp"

namespace pdalg {

/// P = a z zb + b z + conj(b) zb + c with a, c real.
struct HermitianTriple {
  Rational a;
  GaussianRational b;
  Rational c;

  bool is_zero() const { return sgn(a) == 0 && b.is_zero() && sgn(c) == 0; }
  /// a c - |b|^2.
  Rational determinant() const { return a * c - b.norm(); }
  friend bool operator==(const HermitianTriple& x, const HermitianTriple& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

/// z = (alpha z' + beta) / (gamma z' + delta).
struct MoebiusMap {
  GaussianRational alpha{1}, beta{0}, gamma{0}, delta{1};

  GaussianRational determinant() const { return alpha * delta - beta * gamma; }
  friend bool operator==(const MoebiusMap& x, const MoebiusMap& y) {
    return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma && x.delta == y.delta;
  }
};

enum class SurfaceClass { plane, sphere, lobachevskian };
std::string to_string(SurfaceClass c);

/// The chart (z, zb).
Chart one_dim_chart();
RatExpr one_dim_P(const HermitianTriple& t);

/// Structure on (z, zb) with (z,zb) = P and (z,dz) = S dz, S = ∂̄P; the
/// remaining generator brackets follow from the Leibniz rule and
/// hermiticity, and Γ is read off from them. Throws DomainError for P = 0.
PoissonStructure build_one_dim(const HermitianTriple& t);

/// The same P as canonical constants on (z, zb), and the canonical frame
/// M = P with Φ = (z, zb).
CanonicalConstants one_dim_constants(const HermitianTriple& t);
Frame one_dim_frame(const HermitianTriple& t);

/// Congruence [[A,B],[conj B,C]] = [[α,γ],[β,δ]] [[a,b],[conj b,c]] [[conj α, conj β],[conj γ, conj δ]].
/// Throws DomainError for a degenerate map.
HermitianTriple moebius(const HermitianTriple& t, const MoebiusMap& m);
/// The map z = first(second(z'')); moebius(moebius(t, first), second) = moebius(t, compose(first, second)).
MoebiusMap compose(const MoebiusMap& first, const MoebiusMap& second);
/// h' = |αδ - βγ|^2 / (A z zb + B z + conj(B) zb + C)^2 on the primed chart.
RatExpr moebius_metric(const HermitianTriple& t, const MoebiusMap& m);

/// A map taking t to a triple with b = 0.
MoebiusMap diagonalizing_map(const HermitianTriple& t);

/// Classification by the sign of a c - |b|^2. Throws DomainError for the zero triple.
SurfaceClass classify(const HermitianTriple& t);
/// Classification of the diagonalized triple: A = 0 or C = 0 is a plane,
/// otherwise equal signs give a sphere and opposite signs a Lobachevskian plane.
SurfaceClass classify_by_diagonalization(const HermitianTriple& t);

/// -h^{-1} ∂∂̄ log h for h = P^{-2}; equals 2 (a c - |b|^2).
RatExpr gaussian_curvature(const HermitianTriple& t);

/// Parses "a,b,c" scalars of the expression grammar.
HermitianTriple parse_triple(const std::string& a, const std::string& b, const std::string& c);
/// Parses "alpha,beta,gamma,delta".
MoebiusMap parse_moebius(const std::string& text);

}  // namespace pdalg
