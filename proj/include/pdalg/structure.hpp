#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdalg/chart.hpp"
#include "pdalg/forms.hpp"
#include "pdalg/matrix.hpp"
#include "pdalg/ratexpr.hpp"

namespace pdalg {

/// Connection coefficients Γ^a_{bc}, stored densely with (a, b, c) order.
class Connection {
 public:
  Connection() = default;
  explicit Connection(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  RatExpr& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * dim_ + b) * dim_ + c]; }
  const RatExpr& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * dim_ + b) * dim_ + c];
  }
  bool is_zero() const;
  friend bool operator==(const Connection& a, const Connection& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

 private:
  std::size_t dim_ = 0;
  std::vector<RatExpr> data_;
};

/// A Poisson structure on the differential calculus of one chart, given by
/// the bracket of coordinates (x^a, x^b) = P^{ab} and the connection through
///   (x^a, dx^b) = -P^{ac} Γ^b_{cd} dx^d.
/// The bracket of two one-forms is not independent data: it is obtained by
/// applying d to (x^a, dx^b).
class PoissonStructure {
 public:
  PoissonStructure() = default;
  /// Throws DomainError for shape mismatches or a P that is not antisymmetric.
  PoissonStructure(Chart chart, ExprMatrix P, Connection gamma);
  /// Zero connection.
  PoissonStructure(Chart chart, ExprMatrix P);

  const Chart& chart() const { return chart_; }
  std::size_t dim() const { return chart_.dim(); }
  const ExprMatrix& P() const { return P_; }
  const RatExpr& P(std::size_t a, std::size_t b) const { return P_(a, b); }
  const Connection& gamma() const { return gamma_; }
  const RatExpr& gamma(std::size_t a, std::size_t b, std::size_t c) const { return gamma_(a, b, c); }
  /// P_{ab}, the inverse matrix, when P is invertible.
  const std::optional<ExprMatrix>& P_inverse() const { return P_inv_; }
  /// P_inverse() or throws DomainError.
  const ExprMatrix& require_P_inverse() const;

  // Generator brackets.
  /// (x^a, dx^b), a one-form.
  const DiffForm& coord_dx(std::size_t a, std::size_t b) const { return coord_dx_[a * dim() + b]; }
  /// (dx^a, dx^b), a two-form.
  const DiffForm& dx_dx(std::size_t a, std::size_t b) const { return dx_dx_[a * dim() + b]; }

  /// The graded bracket of two arbitrary forms, extended from the generator
  /// brackets by bilinearity, graded symmetry and the derivation rule.
  DiffForm bracket(const DiffForm& f, const DiffForm& g) const;
  /// Bracket of two functions.
  RatExpr bracket(const RatExpr& f, const RatExpr& g) const;

 private:
  DiffForm function_with_dx(const RatExpr& f, std::size_t b) const;
  DiffForm atom_bracket(const RatExpr* fa, int fi, const RatExpr* ga, int gi) const;

  Chart chart_;
  ExprMatrix P_;
  Connection gamma_;
  std::optional<ExprMatrix> P_inv_;
  std::vector<DiffForm> coord_dx_;
  std::vector<DiffForm> dx_dx_;
};

/// Reads Γ off prescribed brackets (x^a, dx^b) = Q[a][b] (one-forms):
/// Γ^b_{cd} = -P_{ca} Q^{ab}_d. Requires an invertible P.
PoissonStructure structure_from_brackets(const Chart& chart, const ExprMatrix& P,
                                         const std::vector<std::vector<DiffForm>>& coord_dx);

}  // namespace pdalg
