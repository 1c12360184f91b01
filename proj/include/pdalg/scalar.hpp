#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace pdalg {

using Rational = mpq_class;

/// Exact complex number re + i*im with arbitrary-precision rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  /// Sign used for printing: the sign of the first nonzero component.
  int leading_sign() const { return sgn(re_) != 0 ? sgn(re_) : sgn(im_); }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (re first, then im); only used for deterministic sorting.
  friend int compare(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c : cmp(a.im_, b.im_);
  }

  /// "3", "-1/2", "i", "-2/3*i", "(1 + 2*i)". The result re-parses to the same value.
  std::string str() const;

  /// Parses "p", "p/q", "re+im*i" style literals as produced by str(), or any
  /// scalar expression of the expression grammar without coordinates.
  static GaussianRational parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string rational_str(const Rational& q);

}  // namespace pdalg
