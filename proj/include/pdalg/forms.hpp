#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pdalg/chart.hpp"
#include "pdalg/ratexpr.hpp"

namespace pdalg {

/// A wedge monomial dx^{i1} ^ ... ^ dx^{ik} with i1 < ... < ik, stored as a bit set.
using WedgeMask = std::uint16_t;

std::vector<std::size_t> mask_indices(WedgeMask m);
WedgeMask mask_of(const std::vector<std::size_t>& strictly_increasing);
inline unsigned mask_degree(WedgeMask m) { return static_cast<unsigned>(__builtin_popcount(m)); }

/// Orders wedge monomials by degree, then lexicographically by index list.
struct WedgeOrder {
  bool operator()(WedgeMask a, WedgeMask b) const;
};

enum class DerivativeMode { full, holo, antiholo };

/// Element of the exterior algebra on a chart: a finite sum of coefficient
/// functions times normal-ordered wedge monomials. Zero coefficients are
/// never stored. Mixed degrees are allowed.
class DiffForm {
 public:
  using Terms = std::map<WedgeMask, RatExpr, WedgeOrder>;

  DiffForm() = default;
  DiffForm(const RatExpr& f);  // NOLINT(google-explicit-constructor)
  DiffForm(long c) : DiffForm(RatExpr(c)) {}  // NOLINT
  static DiffForm dx(std::size_t index);
  static DiffForm term(WedgeMask m, const RatExpr& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a wedge monomial (zero if absent).
  RatExpr coefficient(WedgeMask m) const;
  /// Requires degree 0 (or zero); returns the function part.
  RatExpr as_function() const;

  /// Degree of a homogeneous form; -1 for zero, throws DomainError when inhomogeneous.
  int degree() const;
  bool is_homogeneous() const;
  /// Degree-k component.
  DiffForm component(unsigned k) const;
  /// Split into homogeneous components, keyed by degree.
  std::map<unsigned, DiffForm> homogeneous_parts() const;
  /// Highest coordinate index appearing in a wedge monomial or coefficient, or -1.
  int max_index() const;
  bool has_polynomial_coefficients() const;

  DiffForm operator-() const;
  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  /// Multiplication by a function.
  DiffForm& operator*=(const RatExpr& c);
  friend DiffForm operator*(DiffForm a, const RatExpr& c) { return a *= c; }
  friend DiffForm operator*(const RatExpr& c, DiffForm a) { return a *= c; }
  friend bool operator==(const DiffForm& a, const DiffForm& b) { return a.terms_ == b.terms_; }

  /// Applies `fn` to every coefficient; zero results are dropped.
  template <class Fn>
  DiffForm map_coefficients(Fn&& fn) const {
    DiffForm out;
    for (const auto& [m, c] : terms_) out.add_term(m, fn(c));
    return out;
  }

  void add_term(WedgeMask m, const RatExpr& c);

 private:
  Terms terms_;
};

/// Graded (associative) wedge product.
DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm wedge(std::initializer_list<DiffForm> factors);

/// Exterior derivative d, or its holomorphic / antiholomorphic part δ, δ̄.
/// The partial modes require a complex chart.
DiffForm ext_d(const DiffForm& f, const Chart& chart, DerivativeMode mode = DerivativeMode::full);

/// The *-operation: conjugates coefficients, swaps dz^i <-> dz^ī and reverses
/// the order of the one-form factors. Requires a complex chart.
DiffForm star(const DiffForm& f, const Chart& chart);

/// (holomorphic, antiholomorphic) degree of a wedge monomial.
std::pair<unsigned, unsigned> bidegree(WedgeMask m, const Chart& chart);

/// Throws DomainError when `f` refers to coordinates outside the chart.
void require_fits(const DiffForm& f, const Chart& chart);

}  // namespace pdalg
