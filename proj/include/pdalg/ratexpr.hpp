#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pdalg/polynomial.hpp"

namespace pdalg {

/// Exact rational function numerator/denominator over the Gaussian
/// rationals. Normal form: gcd(numerator, denominator) = 1 and the
/// denominator is monic in grlex order. Normal forms are unique, so
/// operator== is mathematical equality.
class RatExpr {
 public:
  RatExpr() : den_(1) {}
  RatExpr(const GaussianRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatExpr(long c) : RatExpr(GaussianRational(c)) {}           // NOLINT
  RatExpr(Polynomial p) : num_(std::move(p)), den_(1) {}      // NOLINT
  /// Throws DomainError when `den` is the zero polynomial.
  RatExpr(Polynomial num, Polynomial den);
  static RatExpr var(std::size_t index) { return RatExpr(Polynomial::var(index)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// Requires is_constant().
  GaussianRational constant_value() const;

  RatExpr operator-() const;
  RatExpr& operator+=(const RatExpr& o);
  RatExpr& operator-=(const RatExpr& o);
  RatExpr& operator*=(const RatExpr& o);
  RatExpr& operator/=(const RatExpr& o);
  friend RatExpr operator+(RatExpr a, const RatExpr& b) { return a += b; }
  friend RatExpr operator-(RatExpr a, const RatExpr& b) { return a -= b; }
  friend RatExpr operator*(RatExpr a, const RatExpr& b) { return a *= b; }
  friend RatExpr operator/(RatExpr a, const RatExpr& b) { return a /= b; }
  friend bool operator==(const RatExpr& a, const RatExpr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatExpr inverse() const;
  RatExpr pow(long e) const;
  RatExpr diff(std::size_t var) const;
  /// Replaces variable i by map.at(i) for every mapped i.
  RatExpr subst(const std::map<std::size_t, RatExpr>& map) const;
  /// Conjugates coefficients and renames variables by `perm`.
  RatExpr conjugated(const std::vector<std::size_t>& perm) const;

  std::size_t hash() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace pdalg
