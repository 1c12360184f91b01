#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pdalg/scalar.hpp"

namespace pdalg {

/// Largest number of coordinates a chart may have.
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector x_0^{e_0} ... x_{k-1}^{e_{k-1}} over the anonymous
/// variables of a chart. Variables are addressed by position only.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial var(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  /// Index of the largest variable with a nonzero exponent, or -1.
  int max_var() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Requires divides(o); returns o / *this.
  Monomial quotient_of(const Monomial& o) const;
  Monomial with(std::size_t i, unsigned e) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  /// Graded lexicographic comparison: total degree first, then the exponent
  /// of x_0, x_1, ... The printed term order is the descending one.
  friend int grlex_compare(const Monomial& a, const Monomial& b);
  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exps_;
  unsigned degree_ = 0;
};

/// Sparse multivariate polynomial over the Gaussian rationals. Terms are
/// kept sorted by descending grlex order with no zero coefficients, so two
/// equal polynomials have identical term vectors.
class Polynomial {
 public:
  using Term = std::pair<Monomial, GaussianRational>;

  Polynomial() = default;
  Polynomial(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(GaussianRational(c)) {}  // NOLINT
  static Polynomial var(std::size_t index);
  static Polynomial monomial(const Monomial& m, const GaussianRational& c = GaussianRational(1));
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one(); }
  /// Constant term value (zero if absent).
  GaussianRational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
  unsigned degree_in(std::size_t var) const;
  int max_var() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const GaussianRational& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Exact quotient; throws DomainError if `d` does not divide *this.
  Polynomial divide_exact(const Polynomial& d) const;
  /// Divides by the leading coefficient so the leading term is monic.
  Polynomial monic() const;

  Polynomial derivative(std::size_t var) const;
  /// Complex-conjugates every coefficient and renames variables by `perm`
  /// (perm[i] = new index of variable i).
  Polynomial conjugated(const std::vector<std::size_t>& perm) const;
  bool has_real_coefficients() const;

  /// Coefficients with respect to `var`: result[k] is the coefficient of var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

/// Monic greatest common divisor (zero only if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace pdalg
