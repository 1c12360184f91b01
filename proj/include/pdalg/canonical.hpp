#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdalg/report.hpp"
#include "pdalg/sampling.hpp"
#include "pdalg/structure.hpp"
#include "pdalg/tensor.hpp"

namespace pdalg {

/// Constant data of a quadratic Poisson structure
///   P^{AB} = 1/2 Rt^{AB}_{CD} Φ^C Φ^D + f^{AB}_C Φ^C + g^{AB}.
/// Rt(A,B,C,D) = Rt^{AB}_{CD}, f(A,B,C) = f^{AB}_C, g(A,B) = g^{AB}.
class CanonicalConstants {
 public:
  CanonicalConstants() = default;
  explicit CanonicalConstants(std::size_t dim);

  std::size_t dim() const { return dim_; }
  GaussianRational& Rt(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return Rt_[((a * dim_ + b) * dim_ + c) * dim_ + d];
  }
  const GaussianRational& Rt(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return Rt_[((a * dim_ + b) * dim_ + c) * dim_ + d];
  }
  GaussianRational& f(std::size_t a, std::size_t b, std::size_t c) { return f_[(a * dim_ + b) * dim_ + c]; }
  const GaussianRational& f(std::size_t a, std::size_t b, std::size_t c) const {
    return f_[(a * dim_ + b) * dim_ + c];
  }
  GaussianRational& g(std::size_t a, std::size_t b) { return g_[a * dim_ + b]; }
  const GaussianRational& g(std::size_t a, std::size_t b) const { return g_[a * dim_ + b]; }

  bool Rt_is_zero() const;
  bool f_is_zero() const;

  /// Sets Rt^{AB}_{CD} together with the entries implied by antisymmetry in AB
  /// and symmetry in CD.
  void set_Rt(std::size_t a, std::size_t b, std::size_t c, std::size_t d, const GaussianRational& v);
  /// Sets f^{AB}_C and f^{BA}_C = -v.
  void set_f(std::size_t a, std::size_t b, std::size_t c, const GaussianRational& v);
  /// Sets g^{AB} and g^{BA} = -v.
  void set_g(std::size_t a, std::size_t b, const GaussianRational& v);

  friend bool operator==(const CanonicalConstants& x, const CanonicalConstants& y) {
    return x.dim_ == y.dim_ && x.Rt_ == y.Rt_ && x.f_ == y.f_ && x.g_ == y.g_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<GaussianRational> Rt_, f_, g_;
};

/// Affine reparametrization Φ -> N Φ + V.
struct CanonicalTransform {
  ScalarMatrix N;
  std::vector<GaussianRational> V;

  static CanonicalTransform identity(std::size_t dim);
  static CanonicalTransform translation(std::vector<GaussianRational> V);
};

/// t2 after t1.
CanonicalTransform compose(const CanonicalTransform& t2, const CanonicalTransform& t1);

/// M^{aA}, its inverse M_{Aa}, and the canonical functions Φ^A.
struct Frame {
  ExprMatrix M;
  ExprMatrix Minv;
  std::vector<RatExpr> Phi;
};

struct CanonicalBuild {
  PoissonStructure structure;
  Frame frame;
};

/// Index symmetries, the classical Yang-Baxter equation and the three
/// companion conditions, each symmetrized over the lower indices that are
/// contracted with Φ in the Jacobi identity:
///   constants.symmetry-Rt, constants.symmetry-f, constants.symmetry-g,
///   constants.cybe, constants.quadratic, constants.linear, constants.constant.
VerificationReport check_constants(const CanonicalConstants& c);

/// The defect [R12,R13] + [R12,R23] + [R13,R23], indexed (A,B,C,D,E,F) as
/// the (ABC)_(DEF) component.
std::vector<GaussianRational> cybe_defect(const CanonicalConstants& c);

/// Default chart Φ^0..Φ^{n-1} named phi0, phi1, ...
Chart canonical_chart(std::size_t dim);

/// P^{AB} as polynomials in the coordinates of a chart of matching dimension.
ExprMatrix canonical_P(const CanonicalConstants& c);

/// Structure with Γ^A_{BC} = P^{AD} ∂_B P_{DC} and frame M = P, Φ = coordinates.
/// Throws DomainError when the constants fail check_constants (unless
/// `require_valid` is false) or when P is singular.
CanonicalBuild build_canonical(const CanonicalConstants& c, const Chart& chart, bool require_valid = true);
inline CanonicalBuild build_canonical(const CanonicalConstants& c) {
  return build_canonical(c, canonical_chart(c.dim()));
}

/// The quadratic P alone with Γ = 0; usable when P is singular.
PoissonStructure canonical_bracket_only(const CanonicalConstants& c, const Chart& chart);

/// Constants of the same structure in the coordinates Φ' = N Φ + V.
/// Throws DomainError for singular N.
CanonicalConstants transform_constants(const CanonicalConstants& c, const CanonicalTransform& t);

/// Translation Φ -> Φ + V with f' = 0, i.e. Rt^{AB}_{CD} V^D = f^{AB}_C,
/// or nullopt if none exists.
std::optional<CanonicalTransform> find_torsion_zero(const CanonicalConstants& c);

/// Rt_{AB}^{CD} = P_{AE} P^{CF} P^{DG} Rt^E_{BFG}, from the Γ̃ curvature of a
/// structure on its canonical chart. Slots are (A, B, C, D).
Tensor frame_curvature(const PoissonStructure& s);

/// T_A^{BC} = P_{AE} P^{BF} P^{CG} T^E_{FG} on the canonical chart.
Tensor frame_torsion(const PoissonStructure& s);

/// e_A = M_{Aa} dx^a.
std::vector<DiffForm> frame_forms(const Frame& fr);

struct FormsWithReport {
  std::vector<DiffForm> forms;
  VerificationReport report;
};

/// e_A = M_{Aa} dx^a, with checks
///   frame.e-functions   (e_A, x^a) = 0
///   frame.e-e           (e_A, e_B) = -1/2 Rt_{AB}^{CD} e_C e_D
///   frame.torsion       T_A^{BC} = ∂_A P^{BC}
///   frame.nabla-T       Rt^a_{bcd} = ∇_b T^a_{cd}
VerificationReport frame_report(const PoissonStructure& s, const Frame& fr);
FormsWithReport e_basis(const PoissonStructure& s, const Frame& fr);

/// ξ = -Φ^A e_A, with checks
///   xi.functions     (ξ, h) = dh on coordinates and sampled polynomials
///   xi.one-forms     (ξ, dx^a) = -1/2 M^{aA} f^{CD}_A e_C e_D
///   xi.d-xi          dξ = (1/2 f^{AB}_C Φ^C + g^{AB}) e_A e_B
///   xi.forms         (ξ, ω) = dω on sampled forms, only when f = 0
struct XiResult {
  DiffForm xi;
  VerificationReport report;
};
XiResult xi_realization(const PoissonStructure& s, const Frame& fr, const CanonicalConstants& c,
                        const SamplePlan& plan = {});

}  // namespace pdalg
