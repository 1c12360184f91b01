#pragma once

#include <map>

#include "pdalg/report.hpp"
#include "pdalg/structure.hpp"
#include "pdalg/tensor.hpp"

namespace pdalg {

/// Γ, or Γ̃ whose one-form pairs dx with the last lower index.
enum class ConnectionKind { gamma, gamma_tilde };

/// Γ^a_{bc} -> Γ^a_{cb}.
Connection transposed(const Connection& gamma);

/// T^a_{bc} = Γ^a_{bc} - Γ^a_{cb}.
Tensor torsion(const Connection& gamma);
inline Tensor torsion(const PoissonStructure& s) { return torsion(s.gamma()); }

/// Covariant derivative of a coordinate-basis tensor; the derivative index is
/// appended as the last slot. For Γ:
///   ∇_d U^a_b = ∂_d U^a_b + Γ^a_{dm} U^m_b - Γ^m_{db} U^a_m,
/// and ∇̃ uses Γ^a_{md} and Γ^m_{bd} instead.
Tensor covariant_derivative(const Tensor& U, const Connection& gamma, ConnectionKind which = ConnectionKind::gamma);

/// R^a_{bcd}, read from R^a_b = dΓ^a_b + Γ^a_c Γ^c_b = 1/2 R^a_{bcd} dx^c dx^d
/// with Γ^a_b = dx^c Γ^a_{cb} (or Γ̃^a_b = Γ^a_{bc} dx^c).
Tensor curvature(const Connection& gamma, ConnectionKind which = ConnectionKind::gamma);

/// P^{ab} as an (up, up) tensor.
Tensor poisson_tensor(const PoissonStructure& s);

/// The integrability conditions on (P, Γ):
///   integrability.jacobi-P        cyclic sum of P^{ad} ∂_d P^{bc}
///   integrability.curvature       R^a_{bcd} = 0
///   integrability.nabla-tilde-P   ∇̃ P^{ab} = 0
///   integrability.nabla-PR        ∇_s (P^{ac} R̃^b_{ckl}) = 0
/// plus integrability.block-diagonal on complex charts. Without an invertible
/// P only the first is evaluated and the others are not applicable.
VerificationReport check_integrability(const PoissonStructure& s);

/// Adds integrability.block-diagonal: Γ^j_{a k̄} = Γ^j̄_{a k} = 0.
CheckEntry check_block_diagonal(const PoissonStructure& s);

/// The connection for which the metric is covariantly constant and ∇̃P = 0:
///   Γ^a_{bc} = 1/2 P_{bd} h_{ce} (h^{ek} ∂_k P^{ad} + h^{ak} ∂_k P^{de} - h^{dk} ∂_k P^{ea}
///              + P^{ek} ∂_k h^{ad} - P^{ak} ∂_k h^{de} - P^{dk} ∂_k h^{ea}).
/// Throws DomainError for a singular P.
Connection connection_from_metric(const Metric& h, const ExprMatrix& P);

/// Cyclic sum over (b,c,d) of R^a_{bcd} - ∇_b T^a_{cd} + T^a_{bk} T^k_{cd}.
/// Vanishes for every connection.
Tensor first_identity_residual(const Connection& gamma);
/// R̃ - R + ∇_c T^a_{db} + ∇_d T^a_{bc} - (T^a_{bk}T^k_{cd} + T^a_{ck}T^k_{db} + T^a_{dk}T^k_{bc}).
/// Vanishes for every connection.
Tensor second_identity_residual(const Connection& gamma);

/// A polynomial change of coordinates on one chart, x = F(x') with inverse
/// x' = G(x). Both maps send a coordinate index to its image expression.
struct CoordinateChange {
  std::map<std::size_t, RatExpr> old_of_new;  // F
  std::map<std::size_t, RatExpr> new_of_old;  // G
};

/// Throws DomainError unless F(G(x)) = x and G(F(x')) = x'.
void validate(const CoordinateChange& c, std::size_t dim);

/// Components of a coordinate-basis tensor in the primed coordinates,
/// expressed as functions of the primed coordinates.
Tensor transform_tensor(const Tensor& U, const CoordinateChange& c);
/// Γ' = ∂x/∂x' ∂x/∂x' (∂x'/∂x Γ - ∂²x'/∂x∂x), in the primed coordinates.
Connection transform_connection(const Connection& gamma, const CoordinateChange& c);
PoissonStructure transform_structure(const PoissonStructure& s, const CoordinateChange& c);

/// Converts every coordinate slot to the frame e_A = Minv_{Aa} dx^a with dual
/// vectors M^{aA} ∂_a: upper slots contract with Minv, lower slots with M.
Tensor to_frame(const Tensor& U, const ExprMatrix& M, const ExprMatrix& Minv);

/// Tensor residual as a report entry: one case per component.
void expect_zero_tensor(Check& check, const Tensor& residual, const std::string& label, const Chart& chart);

}  // namespace pdalg
