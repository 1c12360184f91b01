#include "pdalg/scalar.hpp"

#include "pdalg/chart.hpp"
#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"

namespace pdalg {

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw DomainError("division by zero scalar");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return rational_str(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_str(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) < 0) {
    Rational a = -im_;
    return "(" + rational_str(re_) + " - " + (a == 1 ? std::string("i") : rational_str(a) + "*i") + ")";
  }
  return "(" + rational_str(re_) + " + " + imag + ")";
}

GaussianRational GaussianRational::parse(std::string_view text) {
  RatExpr e = parse_expr(text, Chart());
  return e.constant_value();
}

}  // namespace pdalg
